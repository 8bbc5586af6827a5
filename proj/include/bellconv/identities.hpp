#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "bellconv/partitions.hpp"
#include "bellconv/rational.hpp"
#include "bellconv/report.hpp"
#include "bellconv/sequence.hpp"
#include "bellconv/sparse_poly.hpp"

namespace bellconv {

// alpha(l, m) = c0 + c1 l + c2 m
struct AffineForm {
    Rational c0;
    Rational c1;
    Rational c2;

    Rational operator()(const Rational& l, const Rational& m) const { return c0 + c1 * l + c2 * m; }

    // tau - alpha
    AffineForm reflected(const Rational& tau) const { return {tau - c0, -c1, -c2}; }

    // "c0,c1,c2"
    static AffineForm parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/*
 * Binomial-sum identities over W_{m,l}(v).
 *
 * For v with k = sum v_j > 0 and n = sum j v_j, the double sums run over
 * 0 <= l <= k, l <= m <= n. Terms with W_{m,l}(v) = 0 vanish identically
 * and are not evaluated; a denominator that vanishes on any remaining term
 * raises PoleError naming (l, m).
 */

enum class Th1Variant { A, B };

// sum (-1)^{|i|} prod C(v_j, i_j) P(i) over the box 0 <= i_j <= v_j; rhs 0.
// RangeError unless deg P < sum v_j and P uses at most v.size() variables.
IdentityReport check_vanishing_sum(const IndexVector& v, const SparsePoly& p);

IdentityReport check_th1(Th1Variant variant, const IndexVector& v, const AffineForm& alpha, const Rational& tau);

// Partial-fraction form; poles also where alpha(l, m) = tau.
IdentityReport check_th1c(const IndexVector& v, const AffineForm& alpha, const Rational& tau);

enum class HagenRotheVariant { symmetric, asymmetric, chu_vandermonde };

IdentityReport check_hagen_rothe(HagenRotheVariant variant, const Rational& x, const Rational& y, const Rational& z,
                                 unsigned k);

// sum (-1)^l alpha(0,0)/alpha(l,m) C(alpha(l,m)+k-l, k) W_{m,l}(v) = 1
IdentityReport check_negative_one(const IndexVector& v, const AffineForm& alpha);

// 1/C(z,k) = sum_{l=1}^k (-1)^{l-1} C(k,l) l/(z-k+l)
IdentityReport check_reciprocal_binomial(const Rational& z, unsigned k);

// p(m, l, tau)
using BinomialKernel = std::function<Rational(unsigned m, unsigned l, const Rational& tau)>;

/**
 * lhs = sum (-1)^l/k! p(m,l,tau) W_{m,l}(v), rhs = gamma_k C(tau, k).
 *
 * The degree hypotheses on p cannot be checked for an opaque callable, so
 * a failing report does not say whether the instance or the hypotheses
 * are at fault. p is only called where W_{m,l}(v) != 0.
 */
IdentityReport check_general_binomial(const IndexVector& v, const BinomialKernel& p, const Rational& gamma_k,
                                      const Rational& tau);

// The kernel that turns check_general_binomial into check_th1(A); its gamma_k is 1.
BinomialKernel th1a_kernel(const IndexVector& v, const AffineForm& alpha);

enum class BinomialIdentity { th1a, th1b, th1c };

/**
 * Checks one of the binomial identities at `points` distinct rational tau,
 * skipping (and recording) tau values that hit a pole. The degree bound is
 * k for th1a/th1b and k+1 for th1c (after multiplying by tau - alpha(0,0)).
 * A pole independent of tau propagates as PoleError.
 */
Certificate certify_binomial(BinomialIdentity identity, const IndexVector& v, const AffineForm& alpha,
                             unsigned points);

// The deterministic sample abscissae used by the certifiers: (7j - 11)/3 for j = 0, 1, ...
Rational sample_point(unsigned j);

/*
 * Convolutions of partial Bell polynomials.
 */

enum class BellConvolution { cor33_first, cor33_second, cor34 };

// Requires 1 <= k <= n and n-k+1 entries of x.
IdentityReport check_bell_convolution(BellConvolution variant, unsigned n, unsigned k, const AffineForm& alpha,
                                      const Rational& tau, const Sequence& x);

// C(k,r) B_{n,k} = sum_{m=k-r}^{n-r} C(n,m) B_{m,k-r} B_{n-m,r}; requires 0 < r <= k <= n.
IdentityReport check_alpha_constant(unsigned n, unsigned k, unsigned r, const Sequence& x);

// sum_{m=k-1}^{n-1} [C(n,m)/k - C(n-1,m)] x_{n-m} B_{m,k-1} = 0; requires 1 <= k <= n, n >= 2.
IdentityReport check_zerosum(unsigned n, unsigned k, const Sequence& x);

enum class StirlingKind { first, second };

// C(k,r) S(n,k) = sum C(n,m) S(m,k-r) S(n-m,r); requires 0 < r <= k <= n.
IdentityReport check_stirling_recurrence(unsigned n, unsigned k, unsigned r, StirlingKind kind);

} // namespace bellconv
