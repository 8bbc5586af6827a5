#pragma once

#include "bellconv/bell.hpp"
#include "bellconv/rational.hpp"
#include "bellconv/report.hpp"
#include "bellconv/sequence.hpp"

namespace bellconv {

/*
 * Q_{n,b}(lambda, z) = sum_{k=1}^n C(lambda + b k, k-1) (k-1)! B_{n,k}(z)
 * and the sequence transforms built from it.
 */

struct TransformParams {
    long a = 0;
    long b = 0;

    // a n + b
    long denominator(unsigned n) const { return a * static_cast<long>(n) + b; }
};

// z must hold n entries.
Rational q_function(unsigned n, long b, const Rational& lambda, const Sequence& z);
// Same, reading Bell values from a precomputed table of z (n <= table.max_n()).
Rational q_function(unsigned n, long b, const Rational& lambda, const BellTable& table);

/**
 * Q_{n,0}(lambda, z) against
 *   z_n + sum_{i=1}^{lambda} i/(lambda+1) sum_{m=1}^{n-1} C(n,m) z_{n-m} Q_{m,0}(i-1, z).
 */
IdentityReport q_recurrence_check(unsigned n, unsigned lambda, const Sequence& z);

/**
 * Q_{n1,b1}(lambda1, z) Q_{n2,b2}(lambda2, z) against the double sum over
 * 2 <= k <= n1+n2, 1 <= l <= n2 with denominators lambda1 + b1 (k-l) + 1
 * and lambda2 + b2 l + 1 (PoleError when either vanishes on a nonzero term).
 */
IdentityReport q_product_check(unsigned n1, unsigned n2, long b1, long b2, const Rational& lambda1,
                               const Rational& lambda2, const Sequence& z);

// y_n = Q_{n,b}(a n, x) for n = 1..n_max. Any (a, b) is accepted.
Sequence forward_transform(const Sequence& x, const TransformParams& params, unsigned n_max);

/**
 * x_n = sum_{k=1}^n (an+bk)/(an+b) C(-an-b, k-1) (k-1)! B_{n,k}(y) for n = 1..n_max.
 * RangeError when (a, b) = (0, 0); PoleError naming n when an + b = 0 for
 * some n <= n_max.
 */
Sequence inverse_transform(const Sequence& y, const TransformParams& params, unsigned n_max);

// The single entry x_n of inverse_transform, needing only y_1..y_n.
Rational inverse_transform_entry(const Sequence& y, const TransformParams& params, unsigned n);

/**
 * Reads the forward transform as a unit-triangular system (the k = 1 term of
 * y_n is x_n) and solves it entry by entry. Independent of the closed-form
 * inverse and defined for every (a, b).
 */
Sequence solve_forward(const Sequence& y, const TransformParams& params, unsigned n_max);

/**
 * With y = forward_transform(x):
 *   sum_{k=k0}^n C(lambda, k-k0) (k-1)! B_{n,k}(y)
 *     = sum_{k=k0}^n C(lambda + an + bk, k-k0) (k-1)! B_{n,k}(x).
 */
IdentityReport lambda_identity_check(const Sequence& x, const TransformParams& params, unsigned n,
                                     const Rational& lambda, unsigned k0);

// lambda_identity_check at `points` distinct lambda; degree bound max(n - k0, 0).
Certificate certify_lambda(const Sequence& x, const TransformParams& params, unsigned n, unsigned k0,
                           unsigned points);

// L_n = Q_{n,0}(-1, z), n = 1..n_max
Sequence log_polynomials(const Sequence& z, unsigned n_max);
// P_n^{(r)} = r Q_{n,0}(r-1, z), n = 1..n_max
Sequence potential_polynomials(const Rational& r, const Sequence& z, unsigned n_max);

} // namespace bellconv
