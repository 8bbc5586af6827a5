#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bellconv/rational.hpp"

namespace bellconv {

/**
 * A finite sequence x = (x_1, ..., x_N) of rationals, 1-based.
 * Reading an index outside [1, N] throws SequenceTooShort.
 */
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Rational> values) : values_(std::move(values)) {}

    // x_j = rule(j) for j = 1..length.
    static Sequence from_rule(std::size_t length, const std::function<Rational(unsigned)>& rule);

    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t j) const;
    std::span<const Rational> values() const { return values_; }

    // Throws SequenceTooShort when fewer than `n` entries are present.
    void require(std::size_t n) const;

    // (c x_1, c x_2, ...)
    Sequence scaled(const Rational& c) const;
    // First n entries.
    Sequence prefix(std::size_t n) const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Rational> values_;
};

Sequence ones(std::size_t length);
// x_j = (j - 1)!, the unsigned Stirling-first-kind specialization.
Sequence factorials(std::size_t length);
// x_j = j
Sequence identity_sequence(std::size_t length);

/**
 * Reproducible small rationals for a seed. Each entry draws two 64-bit
 * words from std::mt19937_64(seed); the numerator is (w0 mod 19) - 9 and
 * the denominator is (w1 mod 9) + 1, so numerators lie in [-9, 9] and
 * denominators in [1, 9] before reduction.
 */
Sequence random_sequence(std::size_t length, std::uint64_t seed);

} // namespace bellconv
