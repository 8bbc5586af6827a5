#include "bellconv/partitions.hpp"

#include <algorithm>

#include "bellconv/errors.hpp"

namespace bellconv {

unsigned IndexVector::part_count() const
{
    unsigned s = 0;
    for (unsigned e : entries_)
        s += e;
    return s;
}

unsigned IndexVector::weight() const
{
    unsigned s = 0;
    for (std::size_t j = 0; j < entries_.size(); ++j)
        s += static_cast<unsigned>(j + 1) * entries_[j];
    return s;
}

bool IndexVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](unsigned e) { return e == 0; });
}

IndexVector IndexVector::trimmed() const
{
    std::vector<unsigned> e = entries_;
    while (!e.empty() && e.back() == 0)
        e.pop_back();
    return IndexVector(std::move(e));
}

std::string IndexVector::to_string() const
{
    std::string s = "(";
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (j)
            s += ",";
        s += std::to_string(entries_[j]);
    }
    return s + ")";
}

bool operator==(const IndexVector& a, const IndexVector& b)
{
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const IndexVector& a, const IndexVector& b)
{
    const std::size_t d = std::max(a.size(), b.size());
    for (std::size_t j = 1; j <= d; ++j)
        if (auto c = a[j] <=> b[j]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

namespace {

// Depth-first over i_1, i_2, ..., i_d in ascending value order, which emits
// vectors in lexicographic order. `pos` is the 0-based coordinate being set.
void enumerate_rec(std::vector<unsigned>& cur, std::size_t pos, unsigned rem_weight, unsigned rem_parts,
                   std::vector<IndexVector>& out)
{
    const unsigned d = static_cast<unsigned>(cur.size());
    const unsigned j = static_cast<unsigned>(pos + 1);
    if (pos + 1 == cur.size()) {
        // Last coordinate is forced.
        if (rem_weight == j * rem_parts) {
            cur[pos] = rem_parts;
            out.emplace_back(cur);
            cur[pos] = 0;
        }
        return;
    }
    for (unsigned c = 0; c <= rem_parts && c * j <= rem_weight; ++c) {
        const unsigned parts_left = rem_parts - c;
        const unsigned weight_left = rem_weight - c * j;
        // Every remaining part sits at a coordinate in (j, d].
        if (weight_left < (j + 1) * parts_left || weight_left > d * parts_left)
            continue;
        cur[pos] = c;
        enumerate_rec(cur, pos + 1, weight_left, parts_left, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<IndexVector> enumerate_pi(unsigned m, unsigned l, unsigned d)
{
    if (d == 0)
        throw RangeError("enumerate_pi: d must be positive");
    std::vector<IndexVector> out;
    if (m < l || m > d * l)
        return out;
    std::vector<unsigned> cur(d, 0);
    enumerate_rec(cur, 0, m, l, out);
    return out;
}

std::vector<IndexVector> enumerate_pi(unsigned n, unsigned k)
{
    if (k == 0)
        return n == 0 ? std::vector<IndexVector>{IndexVector{}} : std::vector<IndexVector>{};
    if (k > n)
        return {};
    return enumerate_pi(n, k, n - k + 1);
}

BigInt w_coefficient(unsigned m, unsigned l, const IndexVector& v)
{
    if (v.is_zero())
        throw RangeError("w_coefficient: v must have a positive entry");
    const unsigned d = static_cast<unsigned>(v.size());
    BigInt total = 0;
    for (const IndexVector& i : enumerate_pi(m, l, d)) {
        BigInt term = 1;
        for (unsigned j = 1; j <= d && term != 0; ++j)
            term *= binomial(v[j], i[j]);
        total += term;
    }
    return total;
}

std::vector<std::vector<BigInt>> w_table(const IndexVector& v)
{
    const unsigned k = v.part_count();
    const unsigned n = v.weight();
    std::vector<std::vector<BigInt>> table(k + 1, std::vector<BigInt>(n + 1, 0));
    for (unsigned l = 0; l <= k; ++l)
        for (unsigned m = l; m <= n; ++m)
            table[l][m] = w_coefficient(m, l, v);
    return table;
}

} // namespace bellconv
