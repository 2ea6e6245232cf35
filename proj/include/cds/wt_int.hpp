#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"

namespace cds {

/// A wavelet-tree node restricted to a window of its sequence.
/// sp and the window are local to the node's own subsequence.
struct wt_node {
    uint64_t id = 0;  // order-preserving: a*(height+1)+depth
    unsigned depth = 0;
    uint64_t a = 0, b = 0;  // symbol range, inclusive
    uint64_t sp = 0;
    uint64_t len = 0;
    uint64_t ep() const { return sp + len - 1; }
    bool empty() const { return len == 0; }
    uint64_t size() const { return len; }
};

//! Balanced wavelet tree over an integer alphabet [0, sigma).
/*!
 * Stored level-wise: level l holds one bit per element, bit (L-1-l) of the
 * symbol, with elements stably ordered by their l-bit prefix. A node at depth
 * l with prefix v covers symbols [v*2^(L-l), min(sigma-1, (v+1)*2^(L-l)-1)]
 * and starts at position cnt_[a] of its level, where cnt_[a] counts elements
 * with symbol < a. Ranges are clipped to sigma-1, so a node is a leaf exactly
 * when a == b and leaves may sit above depth L.
 */
template <wt_bitvector BV = plain_bv<true>>
class wt_int {
public:
    static constexpr std::string_view magic = "CDS.WTIN";

    wt_int() = default;

    /// Throws std::invalid_argument if some symbol is >= sigma or sigma == 0.
    wt_int(std::span<const uint64_t> seq, uint64_t sigma) { build(int_vector_view{seq}, seq.size(), sigma); }
    wt_int(const int_vector& seq, uint64_t sigma) { build(seq, seq.size(), sigma); }

    uint64_t size() const { return n_; }
    uint64_t sigma() const { return sigma_; }
    unsigned height() const { return height_; }
    const std::vector<BV>& levels() const { return levels_; }

    uint64_t operator[](uint64_t i) const
    {
        uint64_t a = 0, span = uint64_t{1} << height_;
        for (unsigned l = 0; l < height_; ++l) {
            const uint64_t b = std::min(a + span - 1, sigma_ - 1);
            if (a == b) break;
            const uint64_t st = cnt_[a];
            const BV& bv = levels_[l];
            span >>= 1;
            const uint64_t ones_before = bv.rank(st);
            if (bv[st + i]) {
                i = bv.rank(st + i) - ones_before;
                a += span;
            } else {
                i -= bv.rank(st + i) - ones_before;
            }
        }
        return a;
    }
    uint64_t access(uint64_t i) const
    {
        if (i >= n_) throw std::out_of_range("wt access " + std::to_string(i) + " >= " + std::to_string(n_));
        return (*this)[i];
    }

    /// Occurrences of s in [0, i).
    uint64_t rank(uint64_t i, uint64_t s) const
    {
        detail::check_rank_arg(i, n_);
        check_symbol(s);
        uint64_t a = 0, span = uint64_t{1} << height_;
        for (unsigned l = 0; l < height_ && i > 0; ++l) {
            const uint64_t b = std::min(a + span - 1, sigma_ - 1);
            if (a == b) break;
            const uint64_t st = cnt_[a];
            const BV& bv = levels_[l];
            span >>= 1;
            const uint64_t ones = bv.rank(st + i) - bv.rank(st);
            if ((s >> (height_ - 1 - l)) & 1) {
                i = ones;
                a += span;
            } else {
                i -= ones;
            }
        }
        return i;
    }

    /// Position of the j-th occurrence of s, j >= 1.
    uint64_t select(uint64_t j, uint64_t s) const
    {
        check_symbol(s);
        detail::check_select_arg(j, cnt_[s + 1] - cnt_[s]);
        // record node starts on the way down
        uint64_t starts[64];
        unsigned depth = 0;
        uint64_t a = 0, span = uint64_t{1} << height_;
        while (depth < height_) {
            const uint64_t b = std::min(a + span - 1, sigma_ - 1);
            if (a == b) break;
            starts[depth] = cnt_[a];
            span >>= 1;
            if ((s >> (height_ - 1 - depth)) & 1) a += span;
            ++depth;
        }
        uint64_t pos = j - 1;
        for (unsigned l = depth; l-- > 0;) {
            const BV& bv = levels_[l];
            const uint64_t st = starts[l];
            const uint64_t ones_before = bv.rank(st);
            if ((s >> (height_ - 1 - l)) & 1) pos = bv.select(ones_before + pos + 1) - st;
            else pos = bv.select0(st - ones_before + pos + 1) - st;
        }
        return pos;
    }

    /// Number of occurrences of every symbol < s.
    uint64_t count_less(uint64_t s) const { return cnt_[s]; }

    wt_node root() const { return root(0, n_ == 0 ? 0 : n_ - 1, n_ == 0); }
    /// Root restricted to positions [sp, ep]; empty when ep < sp.
    wt_node root(uint64_t sp, uint64_t ep, bool empty = false) const
    {
        wt_node v;
        v.a = 0;
        v.b = sigma_ - 1;
        v.sp = sp;
        v.len = (empty || ep < sp) ? 0 : ep - sp + 1;
        if (v.len && ep >= n_) throw std::out_of_range("wt root interval exceeds sequence");
        v.id = node_id(v.a, 0);
        return v;
    }

    bool is_leaf(const wt_node& v) const { return v.a == v.b; }

    /// Children of an internal node. The right child may have an empty symbol
    /// range when clipping leaves the node unary; its size is then 0.
    std::pair<wt_node, wt_node> expand(const wt_node& v) const
    {
        if (is_leaf(v)) throw std::invalid_argument("wt expand called on a leaf");
        const BV& bv = levels_[v.depth];
        const uint64_t st = cnt_[v.a];
        const uint64_t half = (uint64_t{1} << (height_ - v.depth)) >> 1;
        const uint64_t mid = v.a + half;
        const uint64_t ones_before = bv.rank(st);
        const uint64_t o1 = bv.rank(st + v.sp) - ones_before;
        const uint64_t o2 = v.len ? bv.rank(st + v.sp + v.len) - ones_before : o1;
        wt_node l, r;
        l.depth = r.depth = v.depth + 1;
        l.a = v.a;
        l.b = std::min(mid - 1, v.b);
        l.sp = v.sp - o1;
        l.len = v.len - (o2 - o1);
        l.id = node_id(l.a, l.depth);
        r.a = mid;
        r.b = v.b;
        r.sp = o1;
        r.len = o2 - o1;
        r.id = node_id(r.a, r.depth);
        if (mid > v.b) {
            r.b = mid;  // placeholder range for the nonexistent right child
            r.len = 0;
        }
        return {l, r};
    }

    void serialize(writer& w) const
    {
        write_header(w, magic, BV::backend_tag, n_);
        w.put_u64(sigma_);
        write_child(w, "counts", cnt_);
        for (unsigned l = 0; l < height_; ++l) write_child(w, "level_" + std::to_string(l), levels_[l]);
    }
    void load(reader& r)
    {
        frame_header h = read_header(r, magic);
        if (h.param != BV::backend_tag) throw format_error("wt_int backend mismatch");
        n_ = h.len;
        sigma_ = r.get_u64();
        if (sigma_ == 0) throw format_error("wt_int with empty alphabet");
        height_ = bits::ceil_log2(sigma_);
        cnt_.load(r);
        levels_.assign(height_, BV{});
        for (auto& lv : levels_) lv.load(r);
    }

private:
    // Minimal adaptor so spans and int_vectors share one build path.
    struct int_vector_view {
        std::span<const uint64_t> s;
        uint64_t operator[](uint64_t i) const { return s[i]; }
    };

    uint64_t node_id(uint64_t a, unsigned depth) const { return a * (height_ + 1) + depth; }

    void check_symbol(uint64_t s) const
    {
        if (s >= sigma_) throw std::out_of_range("symbol " + std::to_string(s) + " >= sigma " + std::to_string(sigma_));
    }

    template <class Seq>
    void build(const Seq& seq, uint64_t n, uint64_t sigma)
    {
        if (sigma == 0) throw std::invalid_argument("wavelet tree alphabet must be nonempty");
        n_ = n;
        sigma_ = sigma;
        height_ = bits::ceil_log2(sigma);
        tracked_vector<uint64_t> freq(sigma + 1, 0);
        for (uint64_t i = 0; i < n; ++i) {
            const uint64_t s = seq[i];
            if (s >= sigma) throw std::invalid_argument("symbol " + std::to_string(s) + " >= sigma " + std::to_string(sigma));
            ++freq[s];
        }
        cnt_ = int_vector(sigma + 1, 0, bits::width_for(n));
        for (uint64_t s = 0, acc = 0; s <= sigma; ++s) {
            cnt_.set(s, acc);
            if (s < sigma) acc += freq[s];
        }
        freq = {};
        levels_.clear();
        if (height_ == 0) return;
        const unsigned w = bits::width_for(sigma - 1);
        int_vector cur(n, 0, w), next(n, 0, w);
        for (uint64_t i = 0; i < n; ++i) cur.set(i, seq[i]);
        for (unsigned l = 0; l < height_; ++l) {
            const unsigned shift = height_ - 1 - l;
            bit_vector bits(n);
            // stable partition by the (l+1)-bit prefix
            tracked_vector<uint64_t> fill(uint64_t{1} << (l + 1), 0);
            for (uint64_t i = 0; i < n; ++i) ++fill[cur[i] >> shift];
            for (uint64_t p = 0, acc = 0; p < fill.size(); ++p) {
                const uint64_t c = fill[p];
                fill[p] = acc;
                acc += c;
            }
            for (uint64_t i = 0; i < n; ++i) {
                const uint64_t s = cur[i];
                if ((s >> shift) & 1) bits.set(i);
                next.set(fill[s >> shift]++, s);
            }
            levels_.emplace_back(std::move(bits));
            std::swap(cur, next);
        }
    }

    uint64_t n_ = 0;
    uint64_t sigma_ = 1;
    unsigned height_ = 0;
    int_vector cnt_{1, 0, 1};
    std::vector<BV> levels_;
};

}  // namespace cds
