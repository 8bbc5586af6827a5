#include "bellconv/egf.hpp"

#include <algorithm>

#include "bellconv/errors.hpp"

namespace bellconv {

TruncatedEGF::TruncatedEGF(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw RangeError("TruncatedEGF needs at least the constant coefficient");
}

TruncatedEGF TruncatedEGF::one_plus(const Sequence& z)
{
    std::vector<Rational> c{Rational(1)};
    c.insert(c.end(), z.values().begin(), z.values().end());
    return TruncatedEGF(std::move(c));
}

TruncatedEGF TruncatedEGF::constant(const Rational& c, unsigned order)
{
    TruncatedEGF s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedEGF TruncatedEGF::truncated(unsigned order) const
{
    const unsigned n = std::min(order, this->order());
    return TruncatedEGF(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncatedEGF operator+(const TruncatedEGF& a, const TruncatedEGF& b)
{
    TruncatedEGF r(std::min(a.order(), b.order()));
    for (unsigned n = 0; n <= r.order(); ++n)
        r.coeffs_[n] = a[n] + b[n];
    return r;
}

TruncatedEGF operator-(const TruncatedEGF& a, const TruncatedEGF& b)
{
    return a + Rational(-1) * b;
}

TruncatedEGF operator*(const TruncatedEGF& a, const TruncatedEGF& b)
{
    TruncatedEGF r(std::min(a.order(), b.order()));
    for (unsigned n = 0; n <= r.order(); ++n) {
        Rational s(0);
        for (unsigned m = 0; m <= n; ++m)
            s += Rational(binomial(n, m)) * a[m] * b[n - m];
        r.coeffs_[n] = s;
    }
    return r;
}

TruncatedEGF operator*(const Rational& c, const TruncatedEGF& a)
{
    TruncatedEGF r = a;
    for (auto& e : r.coeffs_)
        e *= c;
    return r;
}

nlohmann::ordered_json TruncatedEGF::to_json() const
{
    nlohmann::ordered_json j;
    j["order"] = order();
    j["coeffs"] = bellconv::to_json(coeffs_);
    return j;
}

namespace {

void require_unit(const TruncatedEGF& z, const char* what)
{
    if (z[0] != Rational(1))
        throw RangeError(std::string(what) + ": constant coefficient must be 1, got " + z[0].to_string());
}

} // namespace

TruncatedEGF egf_log(const TruncatedEGF& z)
{
    require_unit(z, "egf_log");
    const unsigned order = z.order();
    std::vector<Rational> l(order + 1, Rational(0));
    // Coefficient n of Z L' = Z':  sum_m C(n,m) z_m l_{n-m+1} = z_{n+1}.
    for (unsigned n = 0; n + 1 <= order; ++n) {
        Rational s = z[n + 1];
        for (unsigned m = 1; m <= n; ++m)
            s -= Rational(binomial(n, m)) * z[m] * l[n - m + 1];
        l[n + 1] = s;
    }
    return TruncatedEGF(std::move(l));
}

TruncatedEGF egf_pow(const TruncatedEGF& z, const Rational& r)
{
    require_unit(z, "egf_pow");
    const unsigned order = z.order();
    std::vector<Rational> p(order + 1, Rational(0));
    p[0] = 1;
    // Coefficient n of P' Z = r Z' P:
    //   sum_m C(n,m) p_{m+1} z_{n-m} = r sum_m C(n,m) z_{m+1} p_{n-m}.
    for (unsigned n = 0; n + 1 <= order; ++n) {
        Rational s(0);
        for (unsigned m = 0; m <= n; ++m)
            s += r * Rational(binomial(n, m)) * z[m + 1] * p[n - m];
        for (unsigned m = 0; m < n; ++m)
            s -= Rational(binomial(n, m)) * p[m + 1] * z[n - m];
        p[n + 1] = s;
    }
    return TruncatedEGF(std::move(p));
}

TruncatedEGF egf_eval_poly(const TruncatedEGF& z, const std::vector<Rational>& f)
{
    TruncatedEGF acc(z.order());
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * z + TruncatedEGF::constant(*it, z.order());
    return acc;
}

TruncatedEGF egf_apply_poly(const TruncatedEGF& y_series, const std::vector<Rational>& f,
                            const TransformParams& params, const Sequence& x)
{
    const unsigned order = y_series.order();
    const Sequence y = forward_transform(x, params, order);
    if (!(y_series == TruncatedEGF::one_plus(y)))
        throw RangeError("egf_apply_poly: series does not match the forward transform of x");

    const BellTable table(order, x.prefix(order));
    std::vector<Rational> out(order + 1, Rational(0));
    for (const auto& c : f)
        out[0] += c; // F(1)
    for (unsigned n = 1; n <= order; ++n) {
        Rational s(0);
        for (unsigned l = 1; l < f.size(); ++l) {
            if (f[l].is_zero())
                continue;
            const Rational lambda = Rational(l) - Rational(1) + Rational(params.a) * Rational(n);
            s += f[l] * Rational(l) * q_function(n, params.b, lambda, table);
        }
        out[n] = s;
    }
    return TruncatedEGF(std::move(out));
}

} // namespace bellconv
