#include <map>

#include "bellconv/bell.hpp"
#include "bellconv/errors.hpp"
#include "bellconv/identities.hpp"

namespace bellconv {

namespace {

std::string lm(unsigned l, unsigned m)
{
    return "(l,m)=(" + std::to_string(l) + "," + std::to_string(m) + ")";
}

// B_{m,l}(x) by the definition sum, cached for one identity evaluation.
class BellCache {
public:
    explicit BellCache(const Sequence& x) : x_(x) {}

    const Rational& operator()(unsigned m, unsigned l)
    {
        auto [it, inserted] = cache_.try_emplace({m, l});
        if (inserted)
            it->second = bell_eval(m, l, x_);
        return it->second;
    }

private:
    const Sequence& x_;
    std::map<std::pair<unsigned, unsigned>, Rational> cache_;
};

// B_{m,l} B_{n-m,k-l} is not the zero polynomial.
bool product_nonzero(unsigned n, unsigned k, unsigned l, unsigned m)
{
    const bool left = l == 0 ? m == 0 : l <= m;
    const bool right = k == l ? n == m : k - l <= n - m;
    return left && right;
}

void require_nk(unsigned n, unsigned k, const char* what)
{
    if (k == 0 || k > n)
        throw RangeError(std::string(what) + ": need 1 <= k <= n");
}

void require_r(unsigned n, unsigned k, unsigned r, const char* what)
{
    if (r == 0 || r > k || k > n)
        throw RangeError(std::string(what) + ": need 0 < r <= k <= n");
}

std::vector<std::pair<std::string, std::string>> nkr(unsigned n, unsigned k, unsigned r)
{
    return {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", std::to_string(r)}};
}

} // namespace

IdentityReport check_bell_convolution(BellConvolution variant, unsigned n, unsigned k, const AffineForm& alpha,
                                      const Rational& tau, const Sequence& x)
{
    require_nk(n, k, "check_bell_convolution");
    x.require(n - k + 1);

    const Rational alpha_kn = alpha(k, n);
    const Rational alpha_00 = alpha(0, 0);
    BellCache bell(x);

    Rational lhs(0);
    for (unsigned l = 0; l <= k; ++l) {
        for (unsigned m = l; m <= n; ++m) {
            if (!product_nonzero(n, k, l, m))
                continue;
            const Rational a = alpha(l, m);
            if (a.is_zero())
                throw PoleError(lm(l, m) + ": alpha vanishes");
            Rational weight;
            switch (variant) {
            case BellConvolution::cor33_first:
                weight = alpha_kn / a * binomial_general(a, k - l) * binomial_general(tau - a, l);
                break;
            case BellConvolution::cor33_second:
                weight = alpha_00 / a * binomial_general(tau - a, k - l) * binomial_general(a, l);
                break;
            case BellConvolution::cor34:
                if (a == tau)
                    throw PoleError(lm(l, m) + ": alpha equals tau=" + tau.to_string());
                weight = tau * binomial_general(a, k - l) * binomial_general(tau - a, l) / (a * (tau - a));
                break;
            }
            weight *= Rational(binomial(n, m)) / Rational(binomial(k, l));
            lhs += weight * bell(m, l) * bell(n - m, k - l);
        }
    }

    Rational rhs = binomial_general(tau, k) * bell(n, k);
    std::string name = "cor33-first";
    if (variant == BellConvolution::cor33_second) {
        name = "cor33-second";
    } else if (variant == BellConvolution::cor34) {
        name = "cor34";
        rhs *= (tau - alpha_00 + alpha_kn) / (alpha_kn * (tau - alpha_00));
    }
    return IdentityReport(name,
                          {{"n", std::to_string(n)},
                           {"k", std::to_string(k)},
                           {"alpha", alpha.to_string()},
                           {"tau", tau.to_string()}},
                          lhs, rhs);
}

IdentityReport check_alpha_constant(unsigned n, unsigned k, unsigned r, const Sequence& x)
{
    require_r(n, k, r, "check_alpha_constant");
    x.require(n - k + 1);
    BellCache bell(x);
    Rational rhs(0);
    for (unsigned m = k - r; m <= n - r; ++m)
        rhs += Rational(binomial(n, m)) * bell(m, k - r) * bell(n - m, r);
    return IdentityReport("alpha-constant", nkr(n, k, r), Rational(binomial(k, r)) * bell(n, k), rhs);
}

IdentityReport check_zerosum(unsigned n, unsigned k, const Sequence& x)
{
    if (n < 2 || k == 0 || k > n)
        throw RangeError("check_zerosum: need 1 <= k <= n and n >= 2");
    x.require(n - k + 1);
    BellCache bell(x);
    Rational lhs(0);
    for (unsigned m = k - 1; m <= n - 1; ++m) {
        const Rational c = Rational(binomial(n, m)) / Rational(k) - Rational(binomial(n - 1, m));
        lhs += c * x[n - m] * bell(m, k - 1);
    }
    return IdentityReport("zerosum", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, lhs, Rational(0));
}

IdentityReport check_stirling_recurrence(unsigned n, unsigned k, unsigned r, StirlingKind kind)
{
    require_r(n, k, r, "check_stirling_recurrence");
    auto s = [kind](unsigned a, unsigned b) {
        return Rational(kind == StirlingKind::second ? stirling2(a, b) : stirling1_unsigned(a, b));
    };
    Rational rhs(0);
    for (unsigned m = k - r; m <= n - r; ++m)
        rhs += Rational(binomial(n, m)) * s(m, k - r) * s(n - m, r);
    auto params = nkr(n, k, r);
    params.emplace_back("kind", kind == StirlingKind::second ? "second" : "first");
    return IdentityReport("stirling-rec", std::move(params), Rational(binomial(k, r)) * s(n, k), rhs);
}

} // namespace bellconv
