#include "bellconv/sequence.hpp"

#include <random>

#include "bellconv/errors.hpp"

namespace bellconv {

Sequence Sequence::from_rule(std::size_t length, const std::function<Rational(unsigned)>& rule)
{
    std::vector<Rational> v;
    v.reserve(length);
    for (std::size_t j = 1; j <= length; ++j)
        v.push_back(rule(static_cast<unsigned>(j)));
    return Sequence(std::move(v));
}

const Rational& Sequence::operator[](std::size_t j) const
{
    if (j == 0 || j > values_.size())
        throw SequenceTooShort(j, values_.size());
    return values_[j - 1];
}

void Sequence::require(std::size_t n) const
{
    if (values_.size() < n)
        throw SequenceTooShort(n, values_.size());
}

Sequence Sequence::scaled(const Rational& c) const
{
    std::vector<Rational> v = values_;
    for (auto& e : v)
        e *= c;
    return Sequence(std::move(v));
}

Sequence Sequence::prefix(std::size_t n) const
{
    require(n);
    return Sequence(std::vector<Rational>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Sequence ones(std::size_t length)
{
    return Sequence(std::vector<Rational>(length, Rational(1)));
}

Sequence factorials(std::size_t length)
{
    return Sequence::from_rule(length, [](unsigned j) { return Rational(factorial(j - 1)); });
}

Sequence identity_sequence(std::size_t length)
{
    return Sequence::from_rule(length, [](unsigned j) { return Rational(j); });
}

Sequence random_sequence(std::size_t length, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::vector<Rational> v;
    v.reserve(length);
    for (std::size_t j = 0; j < length; ++j) {
        const long num = static_cast<long>(gen() % 19) - 9;
        const long den = static_cast<long>(gen() % 9) + 1;
        v.emplace_back(BigInt(num), BigInt(den));
    }
    return Sequence(std::move(v));
}

} // namespace bellconv
