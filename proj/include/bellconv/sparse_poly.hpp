#pragma once

#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "bellconv/rational.hpp"
#include "bellconv/sequence.hpp"

namespace bellconv {

// Exponent vector (e_1, e_2, ...) of x_1^e_1 x_2^e_2 ..., without trailing zeros.
using Exponents = std::vector<unsigned>;

// Graded-lexicographic "greater than": higher total degree first, then
// lexicographically larger exponents first (x_1 > x_2 > ...).
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/**
 * Multivariate polynomial in x_1, x_2, ... with rational coefficients.
 *
 * Terms are kept in a map from canonical exponent vectors to nonzero
 * coefficients, ordered leading term first, so structural equality is
 * polynomial equality.
 */
class SparsePoly {
public:
    using Terms = std::map<Exponents, Rational, GrlexGreater>;

    SparsePoly() = default;
    SparsePoly(const Rational& c);

    // x_j for j >= 1.
    static SparsePoly variable(unsigned j);
    // c * x^exps; exps may carry trailing zeros.
    static SparsePoly monomial(const Rational& c, Exponents exps);

    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    // Coefficient of x^exps (0 when absent).
    Rational coefficient(const Exponents& exps) const;

    // -1 for the zero polynomial.
    int total_degree() const;
    // Largest variable index that occurs, 0 for constants.
    unsigned variable_count() const;

    // Evaluates at x_j = point[j-1]; throws SequenceTooShort if point is short.
    Rational evaluate(std::span<const Rational> point) const;
    Rational evaluate(const Sequence& x) const { return evaluate(x.values()); }

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Rational& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    // [{"coeff": "p/q", "exps": [e1, e2, ...]}, ...] in leading-term-first order.
    nlohmann::ordered_json to_json() const;

private:
    void add_term(Exponents exps, const Rational& c);

    Terms terms_;
};

} // namespace bellconv
