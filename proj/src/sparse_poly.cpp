#include "bellconv/sparse_poly.hpp"

#include <algorithm>
#include <numeric>

#include "bellconv/errors.hpp"

namespace bellconv {

namespace {

unsigned degree_of(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

void trim(Exponents& e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

} // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    const unsigned da = degree_of(a);
    const unsigned db = degree_of(b);
    if (da != db)
        return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned ea = i < a.size() ? a[i] : 0;
        const unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb)
            return ea > eb;
    }
    return false;
}

SparsePoly::SparsePoly(const Rational& c)
{
    if (!c.is_zero())
        terms_.emplace(Exponents{}, c);
}

SparsePoly SparsePoly::variable(unsigned j)
{
    Exponents e(j, 0);
    e.at(j - 1) = 1;
    return monomial(Rational(1), std::move(e));
}

SparsePoly SparsePoly::monomial(const Rational& c, Exponents exps)
{
    SparsePoly p;
    p.add_term(std::move(exps), c);
    return p;
}

Rational SparsePoly::coefficient(const Exponents& exps) const
{
    Exponents e = exps;
    trim(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::total_degree() const
{
    // Leading term under grlex has the largest degree.
    return terms_.empty() ? -1 : static_cast<int>(degree_of(terms_.begin()->first));
}

unsigned SparsePoly::variable_count() const
{
    std::size_t v = 0;
    for (const auto& [e, c] : terms_)
        v = std::max(v, e.size());
    return static_cast<unsigned>(v);
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() < variable_count())
        throw SequenceTooShort(variable_count(), point.size());
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j])
                term *= pow(point[j], e[j]);
        sum += term;
    }
    return sum;
}

void SparsePoly::add_term(Exponents exps, const Rational& c)
{
    if (c.is_zero())
        return;
    trim(exps);
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i)
                e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i)
                e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

nlohmann::ordered_json SparsePoly::to_json() const
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json t;
        t["coeff"] = c.to_string();
        t["exps"] = e;
        arr.push_back(std::move(t));
    }
    return arr;
}

} // namespace bellconv
