#include "bellconv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bellconv {

namespace {

constexpr std::string_view unicode_minus = "\xE2\x88\x92";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (s.starts_with(unicode_minus)) {
        negative = true;
        s.remove_prefix(unicode_minus.size());
    } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    const auto slash = s.find('/');
    const std::string_view num_text = s.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    BigInt num(std::string(num_text), 10);
    BigInt den(std::string(den_text), 10);
    if (den == 0)
        throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
    if (negative)
        num = -num;
    return Rational(num, den);
}

BigInt Rational::to_integer() const
{
    if (!is_integer())
        throw std::domain_error("rational " + to_string() + " is not an integer");
    return value_.get_num();
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent)
{
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational binomial_general(const Rational& t, unsigned j)
{
    Rational falling(1);
    Rational factor = t;
    for (unsigned i = 0; i < j; ++i) {
        falling *= factor;
        factor -= 1;
    }
    return falling / Rational(factorial(j));
}

Rational multinomial(unsigned n, std::span<const unsigned> parts)
{
    BigInt den = 1;
    for (unsigned p : parts)
        den *= factorial(p);
    return Rational(factorial(n), den);
}

} // namespace bellconv
