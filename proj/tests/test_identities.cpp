#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bellconv/errors.hpp"
#include "bellconv/identities.hpp"
#include "oracles.hpp"

using namespace bellconv;
using oracle::choose;

namespace {

Rational q(long p, long d = 1)
{
    return Rational(BigInt(p), BigInt(d));
}

AffineForm form(long c0, long c1, long c2)
{
    return {Rational(c0), Rational(c1), Rational(c2)};
}

struct Shape {
    unsigned n = 0, k = 0;
};

Shape shape(const IndexVector& v)
{
    return {v.weight(), v.part_count()};
}

// Direct double sums over the nonzero W entries.
Rational th1a_lhs(const IndexVector& v, const AffineForm& a, const Rational& tau)
{
    const auto [n, k] = shape(v);
    Rational s(0);
    oracle::for_each_w(v.entries(), [&](unsigned m, unsigned l, const Rational& w) {
        const Rational al = a(l, m);
        s += a(k, n) / al * choose(al, k - l) * choose(tau - al, l) / choose(Rational(k), l) * w;
    });
    return s;
}

Rational th1b_lhs(const IndexVector& v, const AffineForm& a, const Rational& tau)
{
    const auto [n, k] = shape(v);
    (void)n;
    Rational s(0);
    oracle::for_each_w(v.entries(), [&](unsigned m, unsigned l, const Rational& w) {
        const Rational al = a(l, m);
        s += a(0, 0) / al * choose(tau - al, k - l) * choose(al, l) / choose(Rational(k), l) * w;
    });
    return s;
}

Rational th1c_lhs(const IndexVector& v, const AffineForm& a, const Rational& tau)
{
    const unsigned k = v.part_count();
    Rational s(0);
    oracle::for_each_w(v.entries(), [&](unsigned m, unsigned l, const Rational& w) {
        const Rational al = a(l, m);
        s += tau * choose(al, k - l) * choose(tau - al, l) / (al * (tau - al) * choose(Rational(k), l)) * w;
    });
    return s;
}

Rational th1c_rhs(const IndexVector& v, const AffineForm& a, const Rational& tau)
{
    const auto [n, k] = shape(v);
    const Rational akn = a(k, n), a00 = a(0, 0);
    return (tau - a00 + akn) / (akn * (tau - a00)) * choose(tau, k);
}

bool alpha_clear(const IndexVector& v, const AffineForm& a, const Rational& tau, bool th1c)
{
    bool ok = true;
    oracle::for_each_w(v.entries(), [&](unsigned m, unsigned l, const Rational&) {
        ok = ok && !a(l, m).is_zero() && (!th1c || a(l, m) != tau);
    });
    const auto [n, k] = shape(v);
    if (th1c)
        ok = ok && a(0, 0) != tau && !a(k, n).is_zero();
    return ok;
}

} // namespace

TEST_CASE("vanishing sum")
{
    const SparsePoly x1 = SparsePoly::variable(1);
    const SparsePoly x2 = SparsePoly::variable(2);
    CHECK(check_vanishing_sum(IndexVector{2}, x1).pass);
    CHECK(check_vanishing_sum(IndexVector{1, 1}, x1 + x2).pass);
    const IdentityReport r = check_vanishing_sum(IndexVector{3}, x1 * x1);
    CHECK(r.pass);
    CHECK(r.lhs == Rational(0));
    CHECK(r.identity == "vanishing-sum");
    CHECK_THROWS_AS(check_vanishing_sum(IndexVector{2}, x1 * x1), RangeError);
    CHECK_THROWS_AS(check_vanishing_sum(IndexVector{2}, x2), RangeError);
}

TEST_CASE("th1 examples")
{
    const IndexVector v{2, 1};
    const AffineForm l_plus_1 = form(1, 1, 0);
    const IdentityReport a = check_th1(Th1Variant::A, v, l_plus_1, Rational(5));
    CHECK(a.pass);
    CHECK(a.lhs == Rational(10));
    CHECK(a.rhs == Rational(10));
    CHECK(a.identity == "th1a");

    const IdentityReport b = check_th1(Th1Variant::B, v, l_plus_1, Rational(0));
    CHECK(b.pass);
    CHECK(b.rhs == Rational(0));
    CHECK(b.identity == "th1b");

    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (const auto& w : enumerate_pi(n, k)) {
                const IdentityReport r = check_th1(Th1Variant::A, w, form(1, 0, 0), Rational(k));
                CHECK(r.pass);
                CHECK(r.rhs == Rational(1));
            }
}

TEST_CASE("th1c examples")
{
    const IdentityReport r = check_th1c(IndexVector{2, 1}, form(1, 1, 0), Rational(7));
    CHECK(r.pass);
    CHECK(r.identity == "th1c");

    const IdentityReport one = check_th1c(IndexVector{1}, form(1, 0, 0), Rational(3));
    CHECK(one.pass);
    CHECK(one.lhs == q(9, 2));
    CHECK(one.rhs == q(9, 2));
}

TEST_CASE("poles are reported, not skipped")
{
    // alpha = l - 1 vanishes at l = 1, where W is nonzero.
    CHECK_THROWS_AS(check_th1(Th1Variant::A, IndexVector{2, 1}, form(-1, 1, 0), Rational(5)), PoleError);
    CHECK_THROWS_AS(check_th1(Th1Variant::B, IndexVector{2, 1}, form(-1, 1, 0), Rational(5)), PoleError);
    // tau = alpha(0,0)
    CHECK_THROWS_AS(check_th1c(IndexVector{2, 1}, form(1, 1, 0), Rational(1)), PoleError);
    // alpha(l, m) = tau at some support point
    CHECK_THROWS_AS(check_th1c(IndexVector{2, 1}, form(1, 1, 0), Rational(3)), PoleError);
    try {
        check_th1(Th1Variant::A, IndexVector{2, 1}, form(-1, 1, 0), Rational(5));
    } catch (const PoleError& e) {
        CHECK(std::string(e.what()).find("(l,m)=(1,") != std::string::npos);
    }
}

TEST_CASE("th1 sums agree with the direct oracle")
{
    oracle::Gen gen(11);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const unsigned n = gen.uniform(1, 6);
        const auto vs = enumerate_pi(n, gen.uniform(1, n));
        const IndexVector& v = vs[gen.uniform(0, static_cast<unsigned>(vs.size() - 1))];
        const AffineForm a{gen.rational(), gen.rational(), gen.rational()};
        const Rational tau = gen.rational(20);
        const unsigned k = v.part_count();
        if (alpha_clear(v, a, tau, false)) {
            const IdentityReport ra = check_th1(Th1Variant::A, v, a, tau);
            CHECK(ra.lhs == th1a_lhs(v, a, tau));
            CHECK(ra.rhs == choose(tau, k));
            CHECK(ra.pass);
            const IdentityReport rb = check_th1(Th1Variant::B, v, a, tau);
            CHECK(rb.lhs == th1b_lhs(v, a, tau));
            CHECK(rb.pass);
            ++checked;
        } else {
            CHECK_THROWS_AS(check_th1(Th1Variant::A, v, a, tau), PoleError);
        }
        if (alpha_clear(v, a, tau, false) && alpha_clear(v, a, tau, true)) {
            const IdentityReport rc = check_th1c(v, a, tau);
            CHECK(rc.lhs == th1c_lhs(v, a, tau));
            CHECK(rc.rhs == th1c_rhs(v, a, tau));
            CHECK(rc.pass);
        }
    }
    CHECK(checked > 60);
}

TEST_CASE("th1b with reflected alpha")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (const auto& v : enumerate_pi(n, k))
                for (const AffineForm& a : {form(1, 1, 0), form(1, 0, 1), form(1, 1, 1)}) {
                    const Rational tau = q(-11, 3);
                    const IdentityReport r = check_th1(Th1Variant::B, v, a.reflected(tau), tau);
                    CHECK(r.pass);
                }
}

TEST_CASE("Hagen-Rothe family")
{
    const IdentityReport chu = check_hagen_rothe(HagenRotheVariant::chu_vandermonde, Rational(1), Rational(1),
                                                 Rational(0), 2);
    CHECK(chu.pass);
    CHECK(chu.rhs == Rational(1));
    CHECK(chu.identity == "chu-vandermonde");

    const IdentityReport sym =
        check_hagen_rothe(HagenRotheVariant::symmetric, Rational(1), Rational(1), Rational(1), 2);
    CHECK(sym.pass);
    CHECK(sym.lhs == Rational(3));

    const IdentityReport asym =
        check_hagen_rothe(HagenRotheVariant::asymmetric, Rational(2), Rational(3), Rational(0), 2);
    CHECK(asym.pass);
    CHECK(asym.rhs == Rational(10));

    CHECK_THROWS_AS(check_hagen_rothe(HagenRotheVariant::asymmetric, Rational(-1), Rational(3), Rational(1), 2),
                    PoleError);
}

TEST_CASE("symmetric Hagen-Rothe is th1c with v = (k)")
{
    oracle::Gen gen(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational x = gen.nonzero_rational(), y = gen.nonzero_rational(), z = gen.rational();
        const unsigned k = gen.uniform(1, 5);
        const Rational tau = x + y + Rational(k) * z;
        IdentityReport hr;
        try {
            hr = check_hagen_rothe(HagenRotheVariant::symmetric, x, y, z, k);
        } catch (const PoleError&) {
            continue;
        }
        CHECK(hr.pass);
        const AffineForm a{y + Rational(k) * z, -z, Rational(0)};
        try {
            const IdentityReport c = check_th1c(IndexVector{k}, a, tau);
            CHECK(c.pass);
            CHECK(hr.lhs == c.lhs * x * y / tau);
        } catch (const PoleError&) {
        }
    }
}

TEST_CASE("negative one and the reciprocal binomial")
{
    const IdentityReport r = check_negative_one(IndexVector{2, 1}, form(1, 0, 1));
    CHECK(r.pass);
    CHECK(r.lhs == Rational(1));
    CHECK(check_negative_one(IndexVector{1}, form(3, -1, 2)).pass);

    const IdentityReport rec = check_reciprocal_binomial(Rational(5), 3);
    CHECK(rec.pass);
    CHECK(rec.lhs == q(1, 10));
    CHECK(rec.identity == "reciprocal-binomial");

    // alpha = z - k + l on any v in pi(n, k)
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (const auto& v : enumerate_pi(n, k))
                CHECK(check_negative_one(v, form(static_cast<long>(9 - k), 1, 0)).pass);
}

TEST_CASE("pluggable kernel binomial sum")
{
    const IndexVector v{2, 1};
    const AffineForm a = form(1, 1, 0);
    const IdentityReport via_kernel = check_general_binomial(v, th1a_kernel(v, a), Rational(1), Rational(5));
    CHECK(via_kernel.pass);
    CHECK(via_kernel.lhs == check_th1(Th1Variant::A, v, a, Rational(5)).lhs);

    // A single surviving term.
    const BinomialKernel single = [](unsigned, unsigned l, const Rational& tau) {
        if (l != 3)
            return Rational(0);
        return Rational(-1) * Rational(6) * choose(tau, 3);
    };
    CHECK(check_general_binomial(v, single, Rational(1), q(7, 2)).pass);

    // p = tau^k for every (m, l) breaks the degree hypothesis.
    const BinomialKernel bad = [](unsigned, unsigned, const Rational& tau) { return pow(tau, 3); };
    const IdentityReport f = check_general_binomial(v, bad, Rational(-1), Rational(5));
    CHECK_FALSE(f.pass);
    CHECK(f.lhs == Rational(0));
    CHECK(f.rhs == Rational(-10));
}

TEST_CASE("grid certification")
{
    const Certificate c = certify_binomial(BinomialIdentity::th1c, IndexVector{1}, form(1, 0, 0), 4);
    CHECK(c.certified());
    CHECK(c.degree_bound == 2);
    CHECK(c.samples.size() == 4);
    std::set<std::string> taus;
    for (const auto& s : c.samples)
        taus.insert(s.params.back().second);
    CHECK(taus.size() == 4);

    const Certificate a = certify_binomial(BinomialIdentity::th1a, IndexVector{2, 1}, form(1, 1, 0), 8);
    CHECK(a.certified());
    CHECK(a.degree_bound == 3);

    // Too few samples cannot certify.
    const Certificate few = certify_binomial(BinomialIdentity::th1a, IndexVector{2, 1}, form(1, 1, 0), 3);
    CHECK(few.all_pass());
    CHECK_FALSE(few.certified());

    // alpha = 2l - m + 5 vanishes at (l, m) = (1, 7) for v = e_7 whatever tau is.
    IndexVector e7{0, 0, 0, 0, 0, 0, 1};
    CHECK_THROWS_AS(certify_binomial(BinomialIdentity::th1a, e7, form(5, 2, -1), 4), PoleError);
    CHECK(sample_point(0) == q(-11, 3));
    CHECK(sample_point(3) == q(10, 3));
}

TEST_CASE("AffineForm parsing")
{
    const AffineForm a = AffineForm::parse("1/2,-1,3");
    CHECK(a.c0 == q(1, 2));
    CHECK(a.c1 == Rational(-1));
    CHECK(a.c2 == Rational(3));
    CHECK(a(Rational(2), Rational(1)) == q(3, 2));
    CHECK(AffineForm::parse(a.to_string()) == a);
    CHECK_THROWS_AS(AffineForm::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(AffineForm::parse("1,x,2"), std::invalid_argument);
}
