#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars and the integer helpers built on them.
 *
 * Rational wraps a GMP mpq_class and keeps it canonical at all times:
 * the denominator is positive, gcd(|num|, den) = 1, and zero is 0/1.
 * Equality is therefore equality of representations.
 *
 * The text form is "p/q", or "p" when q = 1, with the sign on p.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bellconv {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v)) {}

    Rational(const BigInt& v) : value_(v) {}

    // Throws std::domain_error when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "p", "p/q", an optional leading '+', '-' or U+2212 minus,
    // surrounding whitespace. Non-reduced input is canonicalized.
    // Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Throws std::domain_error unless is_integer().
    BigInt to_integer() const;

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned exponent);

// n!
BigInt factorial(unsigned n);

// Ordinary binomial C(n, k) for nonnegative integers; 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

// Generalized binomial t(t-1)...(t-j+1)/j!, total in t. Equals 1 for j = 0.
Rational binomial_general(const Rational& t, unsigned j);

// n! / (v_1! v_2! ...). Integral whenever sum(v) <= n.
Rational multinomial(unsigned n, std::span<const unsigned> parts);

} // namespace bellconv
