#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "bellconv/rational.hpp"
#include "oracles.hpp"

using namespace bellconv;

TEST_CASE("rationals are canonical")
{
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(BigInt(8), BigInt(4)).to_string() == "2");
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("parse")
{
    CHECK(Rational::parse("3/6") == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse(" +4/2 ") == Rational(2));
    CHECK(Rational::parse("\xe2\x88\x92" "2/5") == Rational(BigInt(-2), BigInt(5)));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("arithmetic")
{
    const Rational a(BigInt(1), BigInt(3));
    const Rational b(BigInt(-1), BigInt(6));
    CHECK(a + b == Rational(BigInt(1), BigInt(6)));
    CHECK(a - b == Rational(BigInt(1), BigInt(2)));
    CHECK(a * b == Rational(BigInt(-1), BigInt(18)));
    CHECK(a / b == Rational(-2));
    CHECK(-a == Rational(BigInt(-1), BigInt(3)));
    CHECK(b < a);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(pow(Rational(BigInt(-2), BigInt(3)), 3) == Rational(BigInt(-8), BigInt(27)));
    CHECK(pow(a, 0) == Rational(1));
    CHECK(Rational(5).to_integer() == 5);
    CHECK_THROWS_AS(a.to_integer(), std::domain_error);
}

TEST_CASE("binomial_general examples")
{
    CHECK(binomial_general(Rational(5), 2) == Rational(10));
    CHECK(binomial_general(Rational(BigInt(7), BigInt(3)), 0) == Rational(1));
    CHECK(binomial_general(Rational(-1), 3) == Rational(-1));
    CHECK(binomial_general(Rational(BigInt(1), BigInt(2)), 2) == Rational(BigInt(-1), BigInt(8)));
    CHECK(binomial_general(Rational(3), 5) == Rational(0));
}

TEST_CASE("factorial and multinomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    for (unsigned n = 0; n <= 20; ++n)
        CHECK(Rational(factorial(n)) == oracle::fact(n));

    const std::vector<unsigned> p21{2, 1};
    const std::vector<unsigned> p111{1, 1, 1};
    CHECK(multinomial(4, p21) == Rational(12));
    CHECK(multinomial(6, std::vector<unsigned>{}) == Rational(720));
    CHECK(multinomial(6, p111) == Rational(720));
    // Not required to be integral.
    CHECK(multinomial(2, std::vector<unsigned>{3}) == Rational(BigInt(1), BigInt(3)));
}

TEST_CASE("binomial_general properties")
{
    oracle::Gen gen(101);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational t = gen.rational(20);
        const unsigned j = gen.uniform(1, 8);
        // Pascal
        CHECK(binomial_general(t, j) == binomial_general(t - Rational(1), j) + binomial_general(t - Rational(1), j - 1));
        // Reflection
        const Rational sign = j % 2 ? Rational(-1) : Rational(1);
        CHECK(binomial_general(-t, j) == sign * binomial_general(t + Rational(j) - Rational(1), j));
        // Falling-factorial oracle
        CHECK(binomial_general(t, j) == oracle::choose(t, j));
        // Canonical form
        const Rational c = binomial_general(t, j);
        CHECK(gcd(c.num(), c.den()) == 1);
        CHECK(c.den() > 0);
    }
    for (unsigned t = 0; t <= 15; ++t)
        for (unsigned j = 0; j <= t; ++j)
            CHECK(binomial_general(Rational(t), j) == oracle::fact(t) / (oracle::fact(j) * oracle::fact(t - j)));
}
