#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bellconv/rational.hpp"

namespace bellconv {

/**
 * Finite sequence (i_1, ..., i_d) of nonnegative integers, 1-based.
 *
 * Two vectors that differ only by trailing zeros compare equal, and
 * reading past the stored entries yields 0.
 */
class IndexVector {
public:
    IndexVector() = default;
    IndexVector(std::initializer_list<unsigned> entries) : entries_(entries) {}
    explicit IndexVector(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

    // Number of stored coordinates d (trailing zeros included).
    std::size_t size() const { return entries_.size(); }

    // i_j for 1 <= j; 0 past the end.
    unsigned operator[](std::size_t j) const { return j >= 1 && j <= entries_.size() ? entries_[j - 1] : 0; }

    std::span<const unsigned> entries() const { return entries_; }

    // i_1 + i_2 + ...
    unsigned part_count() const;
    // i_1 + 2 i_2 + 3 i_3 + ...
    unsigned weight() const;
    bool is_zero() const;

    // Copy with trailing zeros removed.
    IndexVector trimmed() const;

    std::string to_string() const;

    friend bool operator==(const IndexVector& a, const IndexVector& b);
    // Lexicographic on (i_1, i_2, ...) with implicit trailing zeros.
    friend std::strong_ordering operator<=>(const IndexVector& a, const IndexVector& b);

private:
    std::vector<unsigned> entries_;
};

// All i in N_0^d with sum(i) = l and sum(j * i_j) = m, lexicographically ascending.
// Empty when no such vector exists. d must be >= 1 (RangeError otherwise).
std::vector<IndexVector> enumerate_pi(unsigned m, unsigned l, unsigned d);

// pi(n, k): the index set of the partial Bell polynomial B_{n,k}.
std::vector<IndexVector> enumerate_pi(unsigned n, unsigned k);

// W_{m,l}(v) = sum over i in pi_d(m, l) of prod_j C(v_j, i_j), with d = v.size().
// Throws RangeError when v has no positive entry.
BigInt w_coefficient(unsigned m, unsigned l, const IndexVector& v);

/**
 * All W_{m,l}(v) for 0 <= l <= k, 0 <= m <= n, where k = v.part_count()
 * and n = v.weight(). Indexed as table[l][m].
 */
std::vector<std::vector<BigInt>> w_table(const IndexVector& v);

} // namespace bellconv
