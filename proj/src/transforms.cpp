#include "bellconv/transforms.hpp"

#include <algorithm>

#include "bellconv/errors.hpp"
#include "bellconv/identities.hpp"

namespace bellconv {

namespace {

std::string params_string(const TransformParams& p)
{
    return std::to_string(p.a) + "," + std::to_string(p.b);
}

} // namespace

Rational q_function(unsigned n, long b, const Rational& lambda, const BellTable& table)
{
    Rational sum(0);
    for (unsigned k = 1; k <= n; ++k) {
        const Rational& bell = table(n, k);
        if (bell.is_zero())
            continue;
        sum += binomial_general(lambda + Rational(b) * Rational(k), k - 1) * Rational(factorial(k - 1)) * bell;
    }
    return sum;
}

Rational q_function(unsigned n, long b, const Rational& lambda, const Sequence& z)
{
    z.require(n);
    return q_function(n, b, lambda, BellTable(n, z.prefix(n)));
}

IdentityReport q_recurrence_check(unsigned n, unsigned lambda, const Sequence& z)
{
    if (n == 0)
        throw RangeError("q_recurrence_check: n must be positive");
    z.require(n);
    const BellTable table(n, z.prefix(n));
    Rational rhs = z[n];
    for (unsigned i = 1; i <= lambda; ++i) {
        Rational inner(0);
        for (unsigned m = 1; m <= n - 1; ++m)
            inner += Rational(binomial(n, m)) * z[n - m] * q_function(m, 0, Rational(i - 1), table);
        rhs += Rational(i) / Rational(lambda + 1) * inner;
    }
    return IdentityReport("q-recurrence",
                          {{"n", std::to_string(n)}, {"lambda", std::to_string(lambda)}},
                          q_function(n, 0, Rational(lambda), table), rhs);
}

IdentityReport q_product_check(unsigned n1, unsigned n2, long b1, long b2, const Rational& lambda1,
                               const Rational& lambda2, const Sequence& z)
{
    if (n1 == 0 || n2 == 0)
        throw RangeError("q_product_check: n1 and n2 must be positive");
    const unsigned top = std::max(n1, n2);
    z.require(top);
    const BellTable table(top, z.prefix(top));

    const Rational lhs = q_function(n1, b1, lambda1, table) * q_function(n2, b2, lambda2, table);
    Rational rhs(0);
    for (unsigned k = 2; k <= n1 + n2; ++k) {
        for (unsigned l = 1; l <= std::min(n2, k - 1); ++l) {
            const unsigned j = k - l;
            if (j > n1 || l > n2)
                continue;
            const Rational d1 = lambda1 + Rational(b1) * Rational(j) + Rational(1);
            const Rational d2 = lambda2 + Rational(b2) * Rational(l) + Rational(1);
            if (d1.is_zero() || d2.is_zero())
                throw PoleError("(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")");
            rhs += Rational(factorial(k)) * binomial_general(d1, j) * binomial_general(d2, l)
                   / (d1 * d2 * Rational(binomial(k, l))) * table(n1, j) * table(n2, l);
        }
    }
    return IdentityReport("q-product",
                          {{"n1", std::to_string(n1)},
                           {"n2", std::to_string(n2)},
                           {"b1", std::to_string(b1)},
                           {"b2", std::to_string(b2)},
                           {"lambda1", lambda1.to_string()},
                           {"lambda2", lambda2.to_string()}},
                          lhs, rhs);
}

Sequence forward_transform(const Sequence& x, const TransformParams& params, unsigned n_max)
{
    x.require(n_max);
    const BellTable table(n_max, x.prefix(n_max));
    std::vector<Rational> y;
    y.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        y.push_back(q_function(n, params.b, Rational(params.a) * Rational(n), table));
    return Sequence(std::move(y));
}

namespace {

Rational inverse_entry(const BellTable& table, const TransformParams& params, unsigned n)
{
    const long c = params.denominator(n);
    if (c == 0)
        throw PoleError("n=" + std::to_string(n) + ": a*n+b vanishes");
    Rational sum(0);
    for (unsigned k = 1; k <= n; ++k) {
        const long top = params.a * static_cast<long>(n) + params.b * static_cast<long>(k);
        sum += Rational(top) / Rational(c) * binomial_general(Rational(-c), k - 1) * Rational(factorial(k - 1))
               * table(n, k);
    }
    return sum;
}

void require_inverse_params(const TransformParams& params)
{
    if (params.a == 0 && params.b == 0)
        throw RangeError("inverse transform needs (a,b) != (0,0)");
}

} // namespace

Sequence inverse_transform(const Sequence& y, const TransformParams& params, unsigned n_max)
{
    require_inverse_params(params);
    y.require(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        if (params.denominator(n) == 0)
            throw PoleError("n=" + std::to_string(n) + ": a*n+b vanishes");
    const BellTable table(n_max, y.prefix(n_max));
    std::vector<Rational> x;
    x.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        x.push_back(inverse_entry(table, params, n));
    return Sequence(std::move(x));
}

Rational inverse_transform_entry(const Sequence& y, const TransformParams& params, unsigned n)
{
    require_inverse_params(params);
    if (n == 0)
        throw RangeError("inverse_transform_entry: n must be positive");
    y.require(n);
    return inverse_entry(BellTable(n, y.prefix(n)), params, n);
}

Sequence solve_forward(const Sequence& y, const TransformParams& params, unsigned n_max)
{
    y.require(n_max);
    std::vector<Rational> x;
    x.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        // B_{n,k} for k >= 2 only reads x_1..x_{n-1}; pad x_n with 0.
        std::vector<Rational> known = x;
        known.push_back(Rational(0));
        const Sequence partial(std::move(known));
        Rational rest(0);
        for (unsigned k = 2; k <= n; ++k)
            rest += binomial_general(Rational(params.a * static_cast<long>(n) + params.b * static_cast<long>(k)), k - 1)
                    * Rational(factorial(k - 1)) * bell_eval(n, k, partial);
        x.push_back(y[n] - rest);
    }
    return Sequence(std::move(x));
}

IdentityReport lambda_identity_check(const Sequence& x, const TransformParams& params, unsigned n,
                                     const Rational& lambda, unsigned k0)
{
    if (n == 0 || k0 == 0)
        throw RangeError("lambda_identity_check: n and k0 must be positive");
    x.require(n);
    const Sequence y = forward_transform(x, params, n);
    const BellTable bx(n, x.prefix(n));
    const BellTable by(n, y);

    Rational lhs(0);
    Rational rhs(0);
    for (unsigned k = k0; k <= n; ++k) {
        const Rational fk(factorial(k - 1));
        lhs += binomial_general(lambda, k - k0) * fk * by(n, k);
        const Rational shift(params.a * static_cast<long>(n) + params.b * static_cast<long>(k));
        rhs += binomial_general(lambda + shift, k - k0) * fk * bx(n, k);
    }
    return IdentityReport("lambda-identity",
                          {{"ab", params_string(params)},
                           {"n", std::to_string(n)},
                           {"k0", std::to_string(k0)},
                           {"lambda", lambda.to_string()}},
                          lhs, rhs);
}

Certificate certify_lambda(const Sequence& x, const TransformParams& params, unsigned n, unsigned k0,
                           unsigned points)
{
    Certificate cert;
    cert.identity = "lambda-identity";
    cert.parameter = "lambda";
    cert.degree_bound = n >= k0 ? static_cast<int>(n - k0) : 0;
    for (unsigned j = 0; j < points; ++j)
        cert.samples.push_back(lambda_identity_check(x, params, n, sample_point(j), k0));
    return cert;
}

Sequence log_polynomials(const Sequence& z, unsigned n_max)
{
    z.require(n_max);
    const BellTable table(n_max, z.prefix(n_max));
    std::vector<Rational> out;
    for (unsigned n = 1; n <= n_max; ++n)
        out.push_back(q_function(n, 0, Rational(-1), table));
    return Sequence(std::move(out));
}

Sequence potential_polynomials(const Rational& r, const Sequence& z, unsigned n_max)
{
    z.require(n_max);
    const BellTable table(n_max, z.prefix(n_max));
    std::vector<Rational> out;
    for (unsigned n = 1; n <= n_max; ++n)
        out.push_back(r * q_function(n, 0, r - Rational(1), table));
    return Sequence(std::move(out));
}

} // namespace bellconv
