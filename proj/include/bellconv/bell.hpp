#pragma once

#include <vector>

#include "bellconv/rational.hpp"
#include "bellconv/sequence.hpp"
#include "bellconv/sparse_poly.hpp"

namespace bellconv {

/**
 * Partial Bell polynomial B_{n,k} as an explicit polynomial in
 * x_1, ..., x_{n-k+1}: the sum over i in pi(n,k) of
 * n!/(i_1! i_2! ...) * prod_j (x_j / j!)^{i_j}.
 *
 * Requires 1 <= k <= n (RangeError otherwise). Every coefficient is a
 * positive integer; a non-integral coefficient is a logic_error.
 */
SparsePoly bell_symbolic(unsigned n, unsigned k);

/**
 * B_{n,k}(x) from the defining sum over pi(n,k).
 *
 * Boundary values: B_{0,0} = 1, B_{n,0} = 0 for n > 0, B_{n,k} = 0 for k > n.
 * For 1 <= k <= n, x must hold at least n-k+1 entries.
 */
Rational bell_eval(unsigned n, unsigned k, const Sequence& x);

/**
 * B_{n,k}(x) from the one-step recurrence
 *   B_{n,k} = (1/k) sum_{m=k-1}^{n-1} C(n,m) x_{n-m} B_{m,k-1},  B_{m,0} = [m = 0].
 * Intermediate values are memoized for the duration of the call only.
 * Requires 1 <= k <= n and n-k+1 entries of x.
 */
Rational bell_recursive(unsigned n, unsigned k, const Sequence& x);

// S(n,k) = B_{n,k}(1, 1, ...)
BigInt stirling2(unsigned n, unsigned k);
// |s(n,k)| = B_{n,k}(0!, 1!, 2!, ...)
BigInt stirling1_unsigned(unsigned n, unsigned k);

/**
 * Every B_{m,l}(x) for 0 <= l, m <= max_n, including the zero boundary
 * values. x must hold max_n entries.
 */
class BellTable {
public:
    enum class Method { definition, recurrence };

    BellTable(unsigned max_n, const Sequence& x, Method method = Method::recurrence);

    unsigned max_n() const { return max_n_; }
    // B_{m,l}(x); 0 whenever l > m. Throws RangeError when m > max_n.
    const Rational& operator()(unsigned m, unsigned l) const;

private:
    unsigned max_n_;
    // rows_[m][l] for 0 <= l <= m
    std::vector<std::vector<Rational>> rows_;
    Rational zero_;
};

} // namespace bellconv
