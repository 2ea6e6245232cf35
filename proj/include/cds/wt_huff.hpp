#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"

namespace cds {

//! Huffman-shaped wavelet tree.
/*!
 * Symbols with nonzero frequency receive canonical Huffman codes (lengths from
 * the usual merge with ties broken by the smaller minimum symbol; codes
 * assigned in (length, symbol) order, MSB first). Internal nodes own
 * contiguous segments of one backend bitvector, laid out in preorder, one bit
 * per element passing through the node. Leaves store nothing, so the total
 * bit count is sum over symbols of freq(s) * codelen(s).
 *
 * Only code lengths and the bitvector are serialized; node geometry is
 * recomputed on load.
 */
template <wt_bitvector BV = plain_bv<true>>
class wt_huff {
public:
    static constexpr std::string_view magic = "CDS.WTHF";

    wt_huff() = default;
    wt_huff(std::span<const uint64_t> seq, uint64_t sigma) { build(seq_view{seq}, seq.size(), sigma); }
    wt_huff(const int_vector& seq, uint64_t sigma) { build(seq, seq.size(), sigma); }

    uint64_t size() const { return n_; }
    uint64_t sigma() const { return sigma_; }
    /// 0 for absent symbols.
    unsigned code_length(uint64_t s) const { return lens_[s]; }
    uint64_t code(uint64_t s) const { return codes_[s]; }
    uint64_t stored_bits() const { return bv_.size(); }
    const BV& bits() const { return bv_; }

    uint64_t operator[](uint64_t i) const { return inverse_select(i).second; }
    uint64_t access(uint64_t i) const
    {
        if (i >= n_) throw std::out_of_range("wt access " + std::to_string(i) + " >= " + std::to_string(n_));
        return (*this)[i];
    }

    /// (rank(i, T[i]), T[i]) in one descent.
    std::pair<uint64_t, uint64_t> inverse_select(uint64_t i) const
    {
        uint32_t v = 0;
        while (!nodes_[v].leaf()) {
            const node& x = nodes_[v];
            const uint64_t r1 = bv_.rank(x.start + i) - x.ones_before;
            if (bv_[x.start + i]) {
                i = r1;
                v = x.child[1];
            } else {
                i -= r1;
                v = x.child[0];
            }
        }
        return {i, nodes_[v].symbol};
    }

    uint64_t rank(uint64_t i, uint64_t s) const
    {
        detail::check_rank_arg(i, n_);
        check_symbol(s);
        const unsigned len = lens_[s];
        if (len == 0) return present_ == 1 && single_symbol_ == s ? i : 0;
        const uint64_t c = codes_[s];
        uint32_t v = 0;
        for (unsigned d = 0; d < len; ++d) {
            if (i == 0) return 0;
            const node& x = nodes_[v];
            const uint64_t r1 = bv_.rank(x.start + i) - x.ones_before;
            if ((c >> (len - 1 - d)) & 1) {
                i = r1;
                v = x.child[1];
            } else {
                i -= r1;
                v = x.child[0];
            }
        }
        return i;
    }

    uint64_t select(uint64_t j, uint64_t s) const
    {
        check_symbol(s);
        const unsigned len = lens_[s];
        if (len == 0) {
            const uint64_t cnt = (present_ == 1 && single_symbol_ == s) ? n_ : 0;
            detail::check_select_arg(j, cnt);
            return j - 1;
        }
        uint32_t v = leaf_of(s);
        detail::check_select_arg(j, nodes_[v].size);
        uint64_t pos = j - 1;
        const uint64_t c = codes_[s];
        for (unsigned d = len; d-- > 0;) {
            v = nodes_[v].parent;
            const node& x = nodes_[v];
            if ((c >> (len - 1 - d)) & 1) pos = bv_.select(x.ones_before + pos + 1) - x.start;
            else pos = bv_.select0(x.start - x.ones_before + pos + 1) - x.start;
        }
        return pos;
    }

    void serialize(writer& w) const
    {
        write_header(w, magic, BV::backend_tag, n_);
        w.put_u64(sigma_);
        w.put_u64(present_);
        w.put_u64(single_symbol_);
        write_child(w, "code_lengths", lens_iv());
        write_child(w, "bits", bv_);
    }
    void load(reader& r)
    {
        frame_header h = read_header(r, magic);
        if (h.param != BV::backend_tag) throw format_error("wt_huff backend mismatch");
        n_ = h.len;
        sigma_ = r.get_u64();
        present_ = r.get_u64();
        single_symbol_ = r.get_u64();
        int_vector lv;
        lv.load(r);
        if (lv.size() != sigma_) throw format_error("wt_huff code table size mismatch");
        bv_.load(r);
        lens_.assign(sigma_, 0);
        for (uint64_t s = 0; s < sigma_; ++s) lens_[s] = static_cast<uint8_t>(lv[s]);
        assign_codes();
        build_nodes_from_bits();
    }

private:
    struct seq_view {
        std::span<const uint64_t> s;
        uint64_t operator[](uint64_t i) const { return s[i]; }
    };

    static constexpr uint32_t none = ~uint32_t{0};

    struct node {
        uint64_t start = 0;        // first bit of this node's segment
        uint64_t size = 0;         // elements passing through
        uint64_t ones_before = 0;  // rank1(start)
        uint32_t child[2] = {none, none};
        uint32_t parent = none;
        uint64_t symbol = 0;
        bool leaf() const { return child[0] == none; }
    };

    void check_symbol(uint64_t s) const
    {
        if (s >= sigma_) throw std::out_of_range("symbol " + std::to_string(s) + " >= sigma " + std::to_string(sigma_));
    }

    uint32_t leaf_of(uint64_t s) const
    {
        uint32_t v = 0;
        const unsigned len = lens_[s];
        for (unsigned d = 0; d < len; ++d) v = nodes_[v].child[(codes_[s] >> (len - 1 - d)) & 1];
        return v;
    }

    int_vector lens_iv() const
    {
        int_vector iv(sigma_, 0, 7);
        for (uint64_t s = 0; s < sigma_; ++s) iv.set(s, lens_[s]);
        return iv;
    }

    template <class Seq>
    void build(const Seq& seq, uint64_t n, uint64_t sigma)
    {
        if (sigma == 0) throw std::invalid_argument("wavelet tree alphabet must be nonempty");
        n_ = n;
        sigma_ = sigma;
        tracked_vector<uint64_t> freq(sigma, 0);
        for (uint64_t i = 0; i < n; ++i) {
            const uint64_t s = seq[i];
            if (s >= sigma) throw std::invalid_argument("symbol " + std::to_string(s) + " >= sigma " + std::to_string(sigma));
            ++freq[s];
        }
        compute_lengths(freq);
        assign_codes();
        build_trie();
        // node sizes from frequencies
        for (uint64_t s = 0; s < sigma_; ++s) {
            if (!freq[s]) continue;
            uint32_t v = 0;
            nodes_[0].size += freq[s];
            const unsigned len = lens_[s];
            for (unsigned d = 0; d < len; ++d) {
                v = nodes_[v].child[(codes_[s] >> (len - 1 - d)) & 1];
                nodes_[v].size += freq[s];
            }
        }
        if (present_ <= 1) nodes_[0].size = n;
        const uint64_t total = assign_starts();
        bit_vector bits(total);
        tracked_vector<uint64_t> fill(nodes_.size(), 0);
        for (uint64_t i = 0; i < n; ++i) {
            const uint64_t s = seq[i];
            const unsigned len = lens_[s];
            uint32_t v = 0;
            for (unsigned d = 0; d < len; ++d) {
                const unsigned b = (codes_[s] >> (len - 1 - d)) & 1;
                if (b) bits.set(nodes_[v].start + fill[v]);
                ++fill[v];
                v = nodes_[v].child[b];
            }
        }
        bv_ = BV(std::move(bits));
        for (auto& x : nodes_)
            if (!x.leaf()) x.ones_before = bv_.rank(x.start);
    }

    // Huffman code lengths; ties by the smaller minimum symbol of the subtree.
    void compute_lengths(const tracked_vector<uint64_t>& freq)
    {
        lens_.assign(sigma_, 0);
        using item = std::tuple<uint64_t, uint64_t, uint32_t>;  // freq, min symbol, tree index
        std::priority_queue<item, std::vector<item>, std::greater<item>> pq;
        std::vector<uint32_t> parent;
        std::vector<uint64_t> leaf_symbol;
        present_ = 0;
        for (uint64_t s = 0; s < sigma_; ++s) {
            if (!freq[s]) continue;
            pq.emplace(freq[s], s, static_cast<uint32_t>(parent.size()));
            parent.push_back(none);
            leaf_symbol.push_back(s);
            ++present_;
        }
        const size_t leaves = parent.size();
        while (pq.size() > 1) {
            auto [f1, m1, i1] = pq.top();
            pq.pop();
            auto [f2, m2, i2] = pq.top();
            pq.pop();
            const auto id = static_cast<uint32_t>(parent.size());
            parent.push_back(none);
            parent[i1] = parent[i2] = id;
            pq.emplace(f1 + f2, std::min(m1, m2), id);
        }
        for (size_t k = 0; k < leaves; ++k) {
            unsigned d = 0;
            for (uint32_t v = parent[k]; v != none; v = parent[v]) ++d;
            if (d > 63) throw std::length_error("huffman code longer than 63 bits");
            lens_[leaf_symbol[k]] = static_cast<uint8_t>(d);
        }
        if (present_ == 1) {
            lens_[leaf_symbol[0]] = 0;
            single_symbol_ = leaf_symbol[0];
        }
    }

    void assign_codes()
    {
        codes_.assign(sigma_, 0);
        std::vector<std::pair<uint8_t, uint64_t>> order;
        for (uint64_t s = 0; s < sigma_; ++s)
            if (lens_[s]) order.emplace_back(lens_[s], s);
        std::sort(order.begin(), order.end());
        uint64_t c = 0;
        unsigned prev = order.empty() ? 0 : order[0].first;
        for (size_t k = 0; k < order.size(); ++k) {
            const unsigned len = order[k].first;
            c <<= (len - prev);
            codes_[order[k].second] = c++;
            prev = len;
        }
    }

    void build_trie()
    {
        nodes_.assign(1, node{});
        for (uint64_t s = 0; s < sigma_; ++s) {
            const unsigned len = lens_[s];
            if (!len) continue;
            uint32_t v = 0;
            for (unsigned d = 0; d < len; ++d) {
                const unsigned b = (codes_[s] >> (len - 1 - d)) & 1;
                if (nodes_[v].child[b] == none) {
                    nodes_[v].child[b] = static_cast<uint32_t>(nodes_.size());
                    node x;
                    x.parent = v;
                    nodes_.push_back(x);
                }
                v = nodes_[v].child[b];
            }
            nodes_[v].symbol = s;
        }
        if (nodes_.size() == 1) nodes_[0].symbol = single_symbol_;
        for (auto& x : nodes_)
            if (x.child[0] == none && x.child[1] != none) throw format_error("wt_huff code set is not complete");
    }

    // Preorder start offsets of internal-node segments; returns total bits.
    uint64_t assign_starts()
    {
        uint64_t pos = 0;
        std::vector<uint32_t> stack{0};
        while (!stack.empty()) {
            const uint32_t v = stack.back();
            stack.pop_back();
            node& x = nodes_[v];
            if (x.leaf()) continue;
            x.start = pos;
            pos += x.size;
            stack.push_back(x.child[1]);
            stack.push_back(x.child[0]);
        }
        return pos;
    }

    void build_nodes_from_bits()
    {
        build_trie();
        nodes_[0].size = n_;
        uint64_t pos = 0;
        std::vector<uint32_t> stack{0};
        while (!stack.empty()) {
            const uint32_t v = stack.back();
            stack.pop_back();
            node& x = nodes_[v];
            if (x.leaf()) continue;
            x.start = pos;
            pos += x.size;
            if (pos > bv_.size()) throw format_error("wt_huff bit count mismatch");
            x.ones_before = bv_.rank(x.start);
            const uint64_t ones = bv_.rank(x.start + x.size) - x.ones_before;
            nodes_[x.child[1]].size = ones;
            nodes_[x.child[0]].size = x.size - ones;
            stack.push_back(x.child[1]);
            stack.push_back(x.child[0]);
        }
        if (pos != bv_.size()) throw format_error("wt_huff bit count mismatch");
    }

    uint64_t n_ = 0;
    uint64_t sigma_ = 1;
    uint64_t present_ = 0;
    uint64_t single_symbol_ = 0;
    std::vector<uint8_t> lens_;
    std::vector<uint64_t> codes_;
    std::vector<node> nodes_{node{}};
    BV bv_;
};

}  // namespace cds
