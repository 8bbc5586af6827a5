#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellconv/errors.hpp"
#include "bellconv/sparse_poly.hpp"
#include "oracles.hpp"

using namespace bellconv;

namespace {

SparsePoly random_poly(oracle::Gen& gen)
{
    SparsePoly p;
    const unsigned terms = gen.uniform(0, 4);
    for (unsigned t = 0; t < terms; ++t) {
        Exponents e(gen.uniform(1, 3));
        for (auto& x : e)
            x = gen.uniform(0, 2);
        p += SparsePoly::monomial(gen.rational(), e);
    }
    return p;
}

} // namespace

TEST_CASE("construction keeps terms canonical")
{
    const SparsePoly x1 = SparsePoly::variable(1);
    const SparsePoly x2 = SparsePoly::variable(2);
    CHECK((x1 - x1).is_zero());
    CHECK((x1 - x1).total_degree() == -1);
    CHECK(SparsePoly::monomial(Rational(3), {0, 2, 0, 0}) == x2 * x2 * Rational(3));
    CHECK(SparsePoly::monomial(Rational(0), {1}).is_zero());
    CHECK(SparsePoly::monomial(Rational(1), {0, 1, 0}).terms().begin()->first == Exponents{0, 1});
    CHECK(SparsePoly(Rational(5)).total_degree() == 0);
    CHECK(SparsePoly(Rational(5)).variable_count() == 0);

    const SparsePoly p = x1 * x2 * Rational(2) + x2 * x2 * x2;
    CHECK(p.total_degree() == 3);
    CHECK(p.variable_count() == 2);
    CHECK(p.coefficient({1, 1}) == Rational(2));
    CHECK(p.coefficient({1}) == Rational(0));
}

TEST_CASE("evaluation")
{
    const SparsePoly p = SparsePoly::monomial(Rational(4), {1, 0, 1}) + SparsePoly::monomial(Rational(3), {0, 2});
    const std::vector<Rational> pt{Rational(1), Rational(1), Rational(2)};
    CHECK(p.evaluate(pt) == Rational(11));
    const std::vector<Rational> shortpt{Rational(1), Rational(1)};
    CHECK_THROWS_AS(p.evaluate(shortpt), SequenceTooShort);
}

TEST_CASE("json is graded lexicographic, leading term first")
{
    const SparsePoly q = SparsePoly::monomial(Rational(3), {0, 2}) + SparsePoly::monomial(Rational(4), {1, 0, 1}) +
                         SparsePoly::monomial(Rational(BigInt(-1), BigInt(2)), {1});
    CHECK(q.to_json().dump() ==
          R"([{"coeff":"4","exps":[1,0,1]},{"coeff":"3","exps":[0,2]},{"coeff":"-1/2","exps":[1]}])");
}

TEST_CASE("ring laws on random polynomials")
{
    oracle::Gen gen(7);
    for (int trial = 0; trial < 150; ++trial) {
        const SparsePoly a = random_poly(gen);
        const SparsePoly b = random_poly(gen);
        const SparsePoly c = random_poly(gen);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const SparsePoly ab = a * b;
        for (const auto& [e, coeff] : ab.terms()) {
            CHECK(!coeff.is_zero());
            CHECK((e.empty() || e.back() != 0));
        }
        const std::vector<Rational> pt{gen.rational(), gen.rational(), gen.rational()};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
    }
}
