#pragma once

#include <vector>

#include <json.hpp>

#include "bellconv/rational.hpp"
#include "bellconv/sequence.hpp"
#include "bellconv/transforms.hpp"

namespace bellconv {

/**
 * Exponential generating function sum_{n=0}^N c_n t^n / n!, truncated
 * after order N. Binary operations work to the smaller of the two orders.
 */
class TruncatedEGF {
public:
    // The zero series of the given order.
    explicit TruncatedEGF(unsigned order) : coeffs_(order + 1, Rational(0)) {}
    // coeffs = c_0..c_N; must be nonempty.
    explicit TruncatedEGF(std::vector<Rational> coeffs);

    // 1 + sum_{n=1}^N z_n t^n/n! with N = z.size().
    static TruncatedEGF one_plus(const Sequence& z);
    static TruncatedEGF constant(const Rational& c, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational& operator[](unsigned n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedEGF truncated(unsigned order) const;

    friend TruncatedEGF operator+(const TruncatedEGF& a, const TruncatedEGF& b);
    friend TruncatedEGF operator-(const TruncatedEGF& a, const TruncatedEGF& b);
    friend TruncatedEGF operator*(const TruncatedEGF& a, const TruncatedEGF& b);
    friend TruncatedEGF operator*(const Rational& c, const TruncatedEGF& a);
    friend bool operator==(const TruncatedEGF&, const TruncatedEGF&) = default;

    // {"order": N, "coeffs": ["p/q", ...]}
    nlohmann::ordered_json to_json() const;

private:
    std::vector<Rational> coeffs_;
};

// log Z from Z (log Z)' = Z'; requires c_0 = 1 (RangeError otherwise).
TruncatedEGF egf_log(const TruncatedEGF& z);

// Z^r from (Z^r)' Z = r Z' Z^r; requires c_0 = 1.
TruncatedEGF egf_pow(const TruncatedEGF& z, const Rational& r);

// F(Z) for F(w) = sum_l f[l] w^l, by Horner's rule on the series.
TruncatedEGF egf_eval_poly(const TruncatedEGF& z, const std::vector<Rational>& f);

/**
 * F(Y) where Y = 1 + sum y_n t^n/n! and y = forward_transform(x, params):
 * coefficient n >= 1 is sum_{l=1}^m f_l l Q_{n,b}(l-1+an, x) and
 * coefficient 0 is F(1). `y_series` must be that Y (RangeError otherwise).
 */
TruncatedEGF egf_apply_poly(const TruncatedEGF& y_series, const std::vector<Rational>& f,
                            const TransformParams& params, const Sequence& x);

} // namespace bellconv
