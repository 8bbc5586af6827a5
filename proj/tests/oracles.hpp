#pragma once

// Reference computations for the tests. Everything here is deliberately
// naive and shares no code with the library beyond the Rational type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "bellconv/rational.hpp"
#include "bellconv/sequence.hpp"

namespace oracle {

using bellconv::BigInt;
using bellconv::Rational;

inline Rational fact(unsigned n)
{
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i)
        r *= Rational(i);
    return r;
}

// t (t-1) ... (t-j+1) / j!
inline Rational choose(const Rational& t, unsigned j)
{
    Rational num(1);
    for (unsigned i = 0; i < j; ++i)
        num *= t - Rational(i);
    return num / fact(j);
}

// Calls f(block_sizes) once per set partition of {1..n}, via restricted growth strings.
inline void for_each_set_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& f)
{
    std::vector<unsigned> label(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned blocks) {
        if (pos == n) {
            std::vector<unsigned> sizes(blocks, 0);
            for (unsigned b : label)
                ++sizes[b];
            f(sizes);
            return;
        }
        for (unsigned b = 0; b <= blocks; ++b) {
            label[pos] = b;
            rec(pos + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

// B_{n,k}(x) as the sum over set partitions into k blocks of prod x_{|block|}.
inline Rational bell_by_set_partitions(unsigned n, unsigned k, std::span<const Rational> x)
{
    if (n == 0)
        return Rational(k == 0 ? 1 : 0);
    Rational total(0);
    for_each_set_partition(n, [&](const std::vector<unsigned>& sizes) {
        if (sizes.size() != k)
            return;
        Rational p(1);
        for (unsigned s : sizes)
            p *= x[s - 1];
        total += p;
    });
    return total;
}

// B_{n,k}(x) = n!/k! [t^n] (sum_j x_j t^j / j!)^k, by truncated power-series products.
inline Rational bell_by_power_series(unsigned n, unsigned k, std::span<const Rational> x)
{
    std::vector<Rational> base(n + 1, Rational(0));
    for (unsigned j = 1; j <= n && j <= x.size(); ++j)
        base[j] = x[j - 1] / fact(j);
    std::vector<Rational> acc(n + 1, Rational(0));
    acc[0] = 1;
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Rational> next(n + 1, Rational(0));
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; i + j <= n; ++j)
                next[i + j] += acc[i] * base[j];
        acc = std::move(next);
    }
    return acc[n] * fact(n) / fact(k);
}

inline BigInt count_set_partitions(unsigned n, unsigned k)
{
    BigInt count = 0;
    if (n == 0)
        return k == 0 ? 1 : 0;
    for_each_set_partition(n, [&](const std::vector<unsigned>& sizes) {
        if (sizes.size() == k)
            ++count;
    });
    return count;
}

// Number of permutations of n elements with exactly k cycles.
inline BigInt count_permutations_by_cycles(unsigned n, unsigned k)
{
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    BigInt count = 0;
    do {
        std::vector<bool> seen(n, false);
        unsigned cycles = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i])
                continue;
            ++cycles;
            for (unsigned j = i; !seen[j]; j = p[j])
                seen[j] = true;
        }
        if (cycles == k)
            ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Partitions of n into exactly k parts: p(n,k) = p(n-1,k-1) + p(n-k,k).
inline unsigned long partitions_into_parts(unsigned n, unsigned k)
{
    if (n == 0 && k == 0)
        return 1;
    if (n == 0 || k == 0 || k > n)
        return 0;
    return partitions_into_parts(n - 1, k - 1) + partitions_into_parts(n - k, k);
}

// W_{m,l}(v) = [u^l t^m] prod_j (1 + u t^j)^{v_j}.
inline BigInt w_by_generating_function(unsigned m, unsigned l, std::span<const unsigned> v)
{
    std::map<std::pair<unsigned, unsigned>, BigInt> poly{{{0, 0}, 1}};
    for (unsigned j = 1; j <= v.size(); ++j) {
        for (unsigned rep = 0; rep < v[j - 1]; ++rep) {
            std::map<std::pair<unsigned, unsigned>, BigInt> next = poly;
            for (const auto& [key, c] : poly)
                next[{key.first + 1, key.second + j}] += c;
            poly = std::move(next);
        }
    }
    const auto it = poly.find({l, m});
    return it == poly.end() ? BigInt(0) : it->second;
}

// Calls f(m, l, W) for every (m, l) with W_{m,l}(v) != 0.
inline void for_each_w(std::span<const unsigned> v, const std::function<void(unsigned, unsigned, const Rational&)>& f)
{
    unsigned k = 0, n = 0;
    for (unsigned j = 1; j <= v.size(); ++j) {
        k += v[j - 1];
        n += j * v[j - 1];
    }
    for (unsigned l = 0; l <= k; ++l)
        for (unsigned m = l; m <= n; ++m) {
            const BigInt w = w_by_generating_function(m, l, v);
            if (w != 0)
                f(m, l, Rational(w));
        }
}

// Seeded generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // p/q with |p| <= span, 1 <= q <= 7
    Rational rational(long span = 12)
    {
        return Rational(BigInt(integer(-span, span)), BigInt(integer(1, 7)));
    }

    Rational nonzero_rational(long span = 12)
    {
        for (;;) {
            Rational r = rational(span);
            if (!r.is_zero())
                return r;
        }
    }

    bellconv::Sequence sequence(std::size_t length)
    {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < length; ++i)
            v.push_back(rational());
        return bellconv::Sequence(std::move(v));
    }

private:
    std::mt19937_64 rng_;
};

} // namespace oracle
