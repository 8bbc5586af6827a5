#include "bellconv/bell.hpp"

#include <algorithm>
#include <stdexcept>

#include "bellconv/errors.hpp"
#include "bellconv/partitions.hpp"

namespace bellconv {

namespace {

// n!/(i_1! i_2! ...) * prod (1/j!)^{i_j}
Rational bell_coefficient(unsigned n, const IndexVector& i)
{
    BigInt den = 1;
    for (unsigned j = 1; j <= i.size(); ++j) {
        BigInt fj;
        mpz_pow_ui(fj.get_mpz_t(), factorial(j).get_mpz_t(), i[j]);
        den *= factorial(i[j]) * fj;
    }
    return Rational(factorial(n), den);
}

void require_proper(unsigned n, unsigned k, const char* what)
{
    if (k == 0 || k > n)
        throw RangeError(std::string(what) + ": need 1 <= k <= n, got n=" + std::to_string(n)
                         + ", k=" + std::to_string(k));
}

// Fills rows[m][l] by the one-step recurrence. Only entries with
// m - l <= spread are computed (the rest stay 0), so x is read at indices
// up to spread + 1.
std::vector<std::vector<Rational>> recurrence_rows(unsigned max_n, unsigned max_k, unsigned spread,
                                                   const Sequence& x)
{
    std::vector<std::vector<Rational>> rows(max_n + 1);
    for (unsigned m = 0; m <= max_n; ++m)
        rows[m].assign(std::min(m, max_k) + 1, Rational(0));
    rows[0][0] = 1;
    for (unsigned k = 1; k <= max_k; ++k) {
        for (unsigned n = k; n <= std::min(max_n, k + spread); ++n) {
            Rational sum(0);
            for (unsigned m = k - 1; m <= n - 1; ++m)
                sum += Rational(binomial(n, m)) * x[n - m] * rows[m][k - 1];
            rows[n][k] = sum / Rational(k);
        }
    }
    return rows;
}

} // namespace

SparsePoly bell_symbolic(unsigned n, unsigned k)
{
    require_proper(n, k, "bell_symbolic");
    SparsePoly p;
    for (const IndexVector& i : enumerate_pi(n, k)) {
        const Rational c = bell_coefficient(n, i);
        if (!c.is_integer())
            throw std::logic_error("non-integral Bell coefficient " + c.to_string());
        p += SparsePoly::monomial(c, std::vector<unsigned>(i.entries().begin(), i.entries().end()));
    }
    return p;
}

Rational bell_eval(unsigned n, unsigned k, const Sequence& x)
{
    if (k == 0)
        return n == 0 ? Rational(1) : Rational(0);
    if (k > n)
        return Rational(0);
    x.require(n - k + 1);
    Rational sum(0);
    for (const IndexVector& i : enumerate_pi(n, k)) {
        Rational term = bell_coefficient(n, i);
        for (unsigned j = 1; j <= i.size(); ++j)
            if (i[j])
                term *= pow(x[j], i[j]);
        sum += term;
    }
    return sum;
}

Rational bell_recursive(unsigned n, unsigned k, const Sequence& x)
{
    require_proper(n, k, "bell_recursive");
    x.require(n - k + 1);
    return recurrence_rows(n, k, n - k, x)[n][k];
}

BigInt stirling2(unsigned n, unsigned k)
{
    return bell_eval(n, k, ones(n)).to_integer();
}

BigInt stirling1_unsigned(unsigned n, unsigned k)
{
    return bell_eval(n, k, factorials(n)).to_integer();
}

BellTable::BellTable(unsigned max_n, const Sequence& x, Method method) : max_n_(max_n)
{
    x.require(max_n);
    if (method == Method::recurrence) {
        rows_ = recurrence_rows(max_n, max_n, max_n, x);
        return;
    }
    rows_.resize(max_n + 1);
    for (unsigned m = 0; m <= max_n; ++m) {
        rows_[m].reserve(m + 1);
        for (unsigned l = 0; l <= m; ++l)
            rows_[m].push_back(bell_eval(m, l, x));
    }
}

const Rational& BellTable::operator()(unsigned m, unsigned l) const
{
    if (m > max_n_)
        throw RangeError("BellTable: m=" + std::to_string(m) + " exceeds table size "
                         + std::to_string(max_n_));
    return l <= m ? rows_[m][l] : zero_;
}

} // namespace bellconv
