#pragma once
// Brute-force reference implementations used by the tests. Nothing in here
// touches the library's succinct structures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline uint64_t rank1(const std::vector<bool>& b, uint64_t i)
{
    uint64_t r = 0;
    for (uint64_t p = 0; p < i; ++p) r += b[p];
    return r;
}

/// 0-based position of the j-th element equal to v (j >= 1), or -1.
template <class Seq, class V>
int64_t select_value(const Seq& s, uint64_t j, V v)
{
    for (uint64_t p = 0; p < s.size(); ++p)
        if (s[p] == v && --j == 0) return static_cast<int64_t>(p);
    return -1;
}

template <class Seq, class V>
uint64_t rank_value(const Seq& s, uint64_t i, V v)
{
    uint64_t r = 0;
    for (uint64_t p = 0; p < i; ++p) r += (s[p] == v);
    return r;
}

/// Suffix array by direct comparison of suffixes.
inline std::vector<uint64_t> naive_sa(const std::vector<uint64_t>& t)
{
    std::vector<uint64_t> sa(t.size());
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](uint64_t a, uint64_t b) {
        return std::lexicographical_compare(t.begin() + a, t.end(), t.begin() + b, t.end());
    });
    return sa;
}

inline std::vector<uint64_t> inverse(const std::vector<uint64_t>& p)
{
    std::vector<uint64_t> q(p.size());
    for (uint64_t i = 0; i < p.size(); ++i) q[p[i]] = i;
    return q;
}

inline std::vector<uint64_t> bwt(const std::vector<uint64_t>& t, const std::vector<uint64_t>& sa)
{
    const uint64_t n = t.size();
    std::vector<uint64_t> b(n);
    for (uint64_t i = 0; i < n; ++i) b[i] = t[(sa[i] + n - 1) % n];
    return b;
}

inline std::vector<uint64_t> psi(const std::vector<uint64_t>& sa)
{
    const uint64_t n = sa.size();
    auto isa = inverse(sa);
    std::vector<uint64_t> p(n);
    for (uint64_t i = 0; i < n; ++i) p[i] = isa[(sa[i] + 1) % n];
    return p;
}

/// Inclusive SA interval of suffixes starting with pat, as (sp, ep); ep < sp when empty.
inline std::pair<int64_t, int64_t> sa_interval(const std::vector<uint64_t>& t, const std::vector<uint64_t>& sa,
                                               const std::vector<uint64_t>& pat)
{
    int64_t sp = -1, ep = -2;
    for (uint64_t i = 0; i < sa.size(); ++i) {
        bool match = sa[i] + pat.size() <= t.size() && std::equal(pat.begin(), pat.end(), t.begin() + sa[i]);
        if (match) {
            if (sp < 0) sp = static_cast<int64_t>(i);
            ep = static_cast<int64_t>(i);
        }
    }
    if (sp < 0) return {0, -1};
    return {sp, ep};
}

inline uint64_t count_occurrences(const std::vector<uint64_t>& t, const std::vector<uint64_t>& pat)
{
    if (pat.size() > t.size()) return 0;
    uint64_t c = 0;
    for (uint64_t i = 0; i + pat.size() <= t.size(); ++i) c += std::equal(pat.begin(), pat.end(), t.begin() + i);
    return c;
}

/// Leftmost position of the minimum in v[l..r].
template <class V>
uint64_t rmq(const V& v, uint64_t l, uint64_t r)
{
    uint64_t best = l;
    for (uint64_t i = l + 1; i <= r; ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

template <class V>
uint64_t rmaxq(const V& v, uint64_t l, uint64_t r)
{
    uint64_t best = l;
    for (uint64_t i = l + 1; i <= r; ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

struct hit {
    uint64_t doc;
    uint64_t tf;
    bool operator==(const hit&) const = default;
};

/// Top-k by counting every occurrence of pat inside each document.
inline std::vector<hit> topk(const std::vector<std::vector<uint64_t>>& docs, const std::vector<uint64_t>& pat,
                             uint64_t k)
{
    std::vector<hit> all;
    for (uint64_t d = 0; d < docs.size(); ++d) {
        uint64_t tf = count_occurrences(docs[d], pat);
        if (tf) all.push_back({d, tf});
    }
    std::sort(all.begin(), all.end(), [](const hit& a, const hit& b) {
        return a.tf != b.tf ? a.tf > b.tf : a.doc < b.doc;
    });
    if (all.size() > k) all.resize(k);
    return all;
}

inline uint64_t df(const std::vector<std::vector<uint64_t>>& docs, const std::vector<uint64_t>& pat)
{
    uint64_t c = 0;
    for (const auto& d : docs) c += count_occurrences(d, pat) > 0;
    return c;
}

}  // namespace oracle
