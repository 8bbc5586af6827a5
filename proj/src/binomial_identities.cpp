#include "bellconv/errors.hpp"
#include "bellconv/identities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bellconv {

namespace {

Rational sign(unsigned e)
{
    return e % 2 ? Rational(-1) : Rational(1);
}

std::string lm(unsigned l, unsigned m)
{
    return "(l,m)=(" + std::to_string(l) + "," + std::to_string(m) + ")";
}

std::string vec_string(const IndexVector& v)
{
    return format_params(std::vector<unsigned>(v.entries().begin(), v.entries().end()));
}

// The nonzero W_{m,l}(v) of a vector v != 0.
struct Support {
    unsigned n = 0;
    unsigned k = 0;
    struct Entry {
        unsigned l;
        unsigned m;
        Rational w;
    };
    std::vector<Entry> entries;

    explicit Support(const IndexVector& v)
    {
        if (v.is_zero())
            throw RangeError("v must have a positive entry");
        n = v.weight();
        k = v.part_count();
        const auto table = w_table(v);
        for (unsigned l = 0; l <= k; ++l)
            for (unsigned m = l; m <= n; ++m)
                if (table[l][m] != 0)
                    entries.push_back({l, m, Rational(table[l][m])});
    }
};

std::vector<std::pair<std::string, std::string>> base_params(const IndexVector& v, const Support& s)
{
    return {{"v", vec_string(v)}, {"n", std::to_string(s.n)}, {"k", std::to_string(s.k)}};
}

void require_nonzero_alpha(const Support& s, const AffineForm& alpha)
{
    for (const auto& e : s.entries)
        if (alpha(e.l, e.m).is_zero())
            throw PoleError(lm(e.l, e.m) + ": alpha vanishes");
}

void require_not_tau(const Support& s, const AffineForm& alpha, const Rational& tau)
{
    for (const auto& e : s.entries)
        if (alpha(e.l, e.m) == tau)
            throw PoleError(lm(e.l, e.m) + ": alpha equals tau=" + tau.to_string());
}

} // namespace

AffineForm AffineForm::parse(std::string_view text)
{
    std::vector<Rational> c;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        c.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (c.size() != 3)
        throw std::invalid_argument("affine form needs three coefficients c0,c1,c2: '" + std::string(text) + "'");
    return {c[0], c[1], c[2]};
}

std::string AffineForm::to_string() const
{
    return c0.to_string() + "," + c1.to_string() + "," + c2.to_string();
}

IdentityReport check_vanishing_sum(const IndexVector& v, const SparsePoly& p)
{
    const unsigned k = v.part_count();
    if (p.total_degree() >= static_cast<int>(k))
        throw RangeError("vanishing sum needs deg P < " + std::to_string(k) + ", got "
                         + std::to_string(p.total_degree()));
    const std::size_t d = v.size();
    if (p.variable_count() > d)
        throw RangeError("P uses more variables than v has entries");

    Rational sum(0);
    std::vector<unsigned> i(d, 0);
    std::vector<Rational> point(d, Rational(0));
    // Odometer over the box 0 <= i_j <= v_j.
    while (true) {
        Rational term = sign(std::accumulate(i.begin(), i.end(), 0u));
        for (std::size_t j = 0; j < d; ++j)
            term *= Rational(binomial(v[j + 1], i[j]));
        for (std::size_t j = 0; j < d; ++j)
            point[j] = i[j];
        sum += term * p.evaluate(point);

        std::size_t j = 0;
        while (j < d && i[j] == v[j + 1]) {
            i[j] = 0;
            ++j;
        }
        if (j == d)
            break;
        ++i[j];
    }

    std::ostringstream poly;
    poly << p.to_json().dump();
    return IdentityReport("vanishing-sum", {{"v", vec_string(v)}, {"P", poly.str()}}, sum, Rational(0));
}

IdentityReport check_th1(Th1Variant variant, const IndexVector& v, const AffineForm& alpha, const Rational& tau)
{
    const Support s(v);
    require_nonzero_alpha(s, alpha);
    const unsigned k = s.k;
    const Rational alpha_kn = alpha(k, s.n);
    const Rational alpha_00 = alpha(0, 0);

    Rational lhs(0);
    for (const auto& e : s.entries) {
        const Rational a = alpha(e.l, e.m);
        Rational term = variant == Th1Variant::A
                            ? alpha_kn / a * binomial_general(a, k - e.l) * binomial_general(tau - a, e.l)
                            : alpha_00 / a * binomial_general(tau - a, k - e.l) * binomial_general(a, e.l);
        lhs += term / Rational(binomial(k, e.l)) * e.w;
    }

    auto params = base_params(v, s);
    params.emplace_back("alpha", alpha.to_string());
    params.emplace_back("tau", tau.to_string());
    return IdentityReport(variant == Th1Variant::A ? "th1a" : "th1b", std::move(params), lhs,
                          binomial_general(tau, k));
}

IdentityReport check_th1c(const IndexVector& v, const AffineForm& alpha, const Rational& tau)
{
    const Support s(v);
    require_nonzero_alpha(s, alpha);
    require_not_tau(s, alpha, tau);
    const unsigned k = s.k;
    const Rational alpha_kn = alpha(k, s.n);
    const Rational alpha_00 = alpha(0, 0);

    Rational lhs(0);
    for (const auto& e : s.entries) {
        const Rational a = alpha(e.l, e.m);
        lhs += tau * binomial_general(a, k - e.l) * binomial_general(tau - a, e.l)
               / (a * (tau - a) * Rational(binomial(k, e.l))) * e.w;
    }
    const Rational rhs = (tau - alpha_00 + alpha_kn) / (alpha_kn * (tau - alpha_00)) * binomial_general(tau, k);

    auto params = base_params(v, s);
    params.emplace_back("alpha", alpha.to_string());
    params.emplace_back("tau", tau.to_string());
    return IdentityReport("th1c", std::move(params), lhs, rhs);
}

IdentityReport check_hagen_rothe(HagenRotheVariant variant, const Rational& x, const Rational& y, const Rational& z,
                                 unsigned k)
{
    auto nonzero = [](const Rational& d, const std::string& what) {
        if (d.is_zero())
            throw PoleError(what);
    };

    Rational lhs(0);
    Rational rhs;
    std::string name;
    switch (variant) {
    case HagenRotheVariant::chu_vandermonde:
        name = "chu-vandermonde";
        for (unsigned l = 0; l <= k; ++l)
            lhs += binomial_general(x, l) * binomial_general(y, k - l);
        rhs = binomial_general(x + y, k);
        break;
    case HagenRotheVariant::asymmetric:
        name = "hagen-rothe-asymmetric";
        for (unsigned l = 0; l <= k; ++l) {
            const Rational xl = x + Rational(l) * z;
            nonzero(xl, "l=" + std::to_string(l) + ": x+l*z vanishes");
            lhs += x / xl * binomial_general(xl, l) * binomial_general(y + Rational(k - l) * z, k - l);
        }
        rhs = binomial_general(x + y + Rational(k) * z, k);
        break;
    case HagenRotheVariant::symmetric: {
        name = "hagen-rothe-symmetric";
        const Rational total = x + y + Rational(k) * z;
        nonzero(total, "x+y+k*z vanishes");
        for (unsigned l = 0; l <= k; ++l) {
            const Rational xl = x + Rational(l) * z;
            const Rational yl = y + Rational(k - l) * z;
            nonzero(xl, "l=" + std::to_string(l) + ": x+l*z vanishes");
            nonzero(yl, "l=" + std::to_string(l) + ": y+(k-l)*z vanishes");
            lhs += x / xl * binomial_general(xl, l) * y / yl * binomial_general(yl, k - l);
        }
        rhs = (x + y) / total * binomial_general(total, k);
        break;
    }
    }
    return IdentityReport(name,
                          {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}, {"k", std::to_string(k)}},
                          lhs, rhs);
}

IdentityReport check_negative_one(const IndexVector& v, const AffineForm& alpha)
{
    const Support s(v);
    require_nonzero_alpha(s, alpha);
    const Rational alpha_00 = alpha(0, 0);
    Rational lhs(0);
    for (const auto& e : s.entries) {
        const Rational a = alpha(e.l, e.m);
        lhs += sign(e.l) * alpha_00 / a * binomial_general(a + Rational(s.k - e.l), s.k) * e.w;
    }
    auto params = base_params(v, s);
    params.emplace_back("alpha", alpha.to_string());
    return IdentityReport("negative-one", std::move(params), lhs, Rational(1));
}

IdentityReport check_reciprocal_binomial(const Rational& z, unsigned k)
{
    const Rational c = binomial_general(z, k);
    if (c.is_zero())
        throw PoleError("C(z,k) vanishes");
    Rational rhs(0);
    for (unsigned l = 1; l <= k; ++l) {
        const Rational d = z - Rational(k) + Rational(l);
        if (d.is_zero())
            throw PoleError("l=" + std::to_string(l) + ": z-k+l vanishes");
        rhs += sign(l - 1) * Rational(binomial(k, l)) * Rational(l) / d;
    }
    return IdentityReport("reciprocal-binomial", {{"z", z.to_string()}, {"k", std::to_string(k)}},
                          Rational(1) / c, rhs);
}

IdentityReport check_general_binomial(const IndexVector& v, const BinomialKernel& p, const Rational& gamma_k,
                                      const Rational& tau)
{
    const Support s(v);
    const Rational k_fact(factorial(s.k));
    Rational lhs(0);
    for (const auto& e : s.entries)
        lhs += sign(e.l) / k_fact * p(e.m, e.l, tau) * e.w;
    auto params = base_params(v, s);
    params.emplace_back("gamma_k", gamma_k.to_string());
    params.emplace_back("tau", tau.to_string());
    return IdentityReport("general-binomial", std::move(params), lhs, gamma_k * binomial_general(tau, s.k));
}

BinomialKernel th1a_kernel(const IndexVector& v, const AffineForm& alpha)
{
    const unsigned k = v.part_count();
    const unsigned n = v.weight();
    return [k, n, alpha](unsigned m, unsigned l, const Rational& tau) {
        const Rational a = alpha(l, m);
        if (a.is_zero())
            throw PoleError(lm(l, m) + ": alpha vanishes");
        return sign(l) * Rational(factorial(k)) * alpha(k, n) / a * binomial_general(a, k - l)
               * binomial_general(tau - a, l) / Rational(binomial(k, l));
    };
}

Rational sample_point(unsigned j)
{
    return Rational(BigInt(7 * static_cast<long>(j) - 11), BigInt(3));
}

Certificate certify_binomial(BinomialIdentity identity, const IndexVector& v, const AffineForm& alpha,
                             unsigned points)
{
    const Support s(v);
    require_nonzero_alpha(s, alpha);

    Certificate cert;
    cert.parameter = "tau";
    switch (identity) {
    case BinomialIdentity::th1a:
        cert.identity = "th1a";
        cert.degree_bound = static_cast<int>(s.k);
        break;
    case BinomialIdentity::th1b:
        cert.identity = "th1b";
        cert.degree_bound = static_cast<int>(s.k);
        break;
    case BinomialIdentity::th1c:
        cert.identity = "th1c";
        cert.degree_bound = static_cast<int>(s.k) + 1;
        break;
    }

    // tau values where some alpha(l, m) = tau on the support.
    std::vector<SkippedPole> tau_poles;
    if (identity == BinomialIdentity::th1c)
        for (const auto& e : s.entries)
            tau_poles.push_back({e.l, e.m, alpha(e.l, e.m)});

    for (unsigned j = 0; cert.samples.size() < points; ++j) {
        const Rational tau = sample_point(j);
        bool hit = false;
        for (const auto& p : tau_poles) {
            if (p.value == tau) {
                cert.skipped_poles.push_back(p);
                hit = true;
            }
        }
        if (hit)
            continue;
        switch (identity) {
        case BinomialIdentity::th1a:
            cert.samples.push_back(check_th1(Th1Variant::A, v, alpha, tau));
            break;
        case BinomialIdentity::th1b:
            cert.samples.push_back(check_th1(Th1Variant::B, v, alpha, tau));
            break;
        case BinomialIdentity::th1c:
            cert.samples.push_back(check_th1c(v, alpha, tau));
            break;
        }
    }
    return cert;
}

} // namespace bellconv
