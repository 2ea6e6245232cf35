#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cds/alphabet.hpp"
#include "cds/construct.hpp"
#include "cds/rrr_vector.hpp"
#include "cds/sa_sampling.hpp"
#include "cds/wt_huff.hpp"

namespace cds {

//! Compressed suffix array over a wavelet tree of the BWT (in codes).
/*!
 * LF(i) = C[c] + rank_c(BWT, i) with c = BWT[i]. SA values are recovered by
 * walking LF back to a sample; ISA[p] starts at the next sampled text
 * position at or after p (position n wraps to 0) and walks LF down to p.
 */
template <class WT = wt_huff<rrr_vector>>
class csa_wt {
public:
    static constexpr std::string_view magic = "CDS.CSAW";

    csa_wt() = default;

    /// In-memory construction from a text whose last symbol is the unique 0.
    csa_wt(const int_vector& text, alphabet_mode mode, uint64_t text_sigma, sample_order kind = sample_order::text,
           uint64_t rate = 32)
        : alpha_(text, mode, text_sigma)
    {
        const int_vector sa = suffix_array(text);
        const uint64_t n = text.size();
        int_vector codes(n, 0, bits::width_for(alpha_.sigma() == 0 ? 0 : alpha_.sigma() - 1));
        for (uint64_t i = 0; i < n; ++i) codes.set(i, code_of(text[sa[i] == 0 ? n - 1 : sa[i] - 1]));
        wt_ = WT(codes, alpha_.sigma());
        int_vector_cursor cur(sa);
        samples_ = sa_sampling(cur, n, kind, rate);
    }

    /// Construction from a BWT (text symbols) and a sequential SA source.
    template <class Source>
    csa_wt(alphabet alpha, const int_vector& bwt, Source& sa, sample_order kind, uint64_t rate)
        : alpha_(std::move(alpha))
    {
        const uint64_t n = bwt.size();
        if (n != alpha_.size()) throw std::invalid_argument("BWT length does not match alphabet counts");
        {
            int_vector codes(n, 0, bits::width_for(alpha_.sigma() == 0 ? 0 : alpha_.sigma() - 1));
            for (uint64_t i = 0; i < n; ++i) codes.set(i, code_of(bwt[i]));
            wt_ = WT(codes, alpha_.sigma());
        }
        samples_ = sa_sampling(sa, n, kind, rate);
    }

    uint64_t size() const { return alpha_.size(); }
    const alphabet& alpha() const { return alpha_; }
    const sa_sampling& samples() const { return samples_; }
    const WT& wavelet_tree() const { return wt_; }

    uint64_t lf(uint64_t i) const
    {
        auto [r, c] = wt_.inverse_select(i);
        return alpha_.C(c) + r;
    }
    /// BWT[i] as a text symbol.
    uint64_t bwt(uint64_t i) const { return alpha_.to_symbol(wt_[i]); }

    sa_range backward_search(std::span<const uint64_t> pattern) const
    {
        sa_range r{0, size()};
        for (size_t k = pattern.size(); k-- > 0 && !r.empty();) {
            uint64_t c;
            if (!alpha_.to_code(pattern[k], c)) return {};
            const uint64_t lo = alpha_.C(c) + wt_.rank(r.sp, c);
            const uint64_t hi = alpha_.C(c) + wt_.rank(r.sp + r.len, c);
            r = {lo, hi - lo};
        }
        if (r.empty()) return {};
        return r;
    }
    uint64_t count(std::span<const uint64_t> pattern) const { return backward_search(pattern).len; }

    uint64_t sa(uint64_t i) const
    {
        const uint64_t n = size();
        if (i >= n) throw std::out_of_range("sa index " + std::to_string(i) + " >= " + std::to_string(n));
        uint64_t v, k = 0;
        while (!samples_.sa_sample(i, v)) {
            i = lf(i);
            ++k;
        }
        return (v + k) % n;
    }

    uint64_t isa(uint64_t p) const
    {
        if (p >= size()) throw std::out_of_range("isa position " + std::to_string(p) + " >= " + std::to_string(size()));
        return isa_unchecked(p);
    }

    std::vector<uint64_t> extract(uint64_t l, uint64_t r) const
    {
        if (l > r || r >= size()) throw std::out_of_range("extract range outside text");
        std::vector<uint64_t> out(r - l + 1);
        uint64_t i = isa_unchecked(r + 1 == size() ? 0 : r + 1);
        for (uint64_t p = r + 1; p-- > l;) {
            auto [rk, c] = wt_.inverse_select(i);
            out[p - l] = alpha_.to_symbol(c);
            i = alpha_.C(c) + rk;
        }
        return out;
    }

    void serialize(writer& w) const
    {
        write_header(w, magic, static_cast<uint8_t>(alpha_.mode()), size());
        write_child(w, "alphabet", alpha_);
        write_child(w, "wt_bwt", wt_);
        write_child(w, "samples", samples_);
    }
    void load(reader& r)
    {
        frame_header h = read_header(r, magic);
        alpha_.load(r);
        wt_.load(r);
        samples_.load(r);
        if (alpha_.size() != h.len || wt_.size() != h.len || samples_.size() != h.len)
            throw format_error("csa_wt component sizes disagree");
    }

private:
    uint64_t code_of(uint64_t symbol) const
    {
        uint64_t c = 0;
        if (!alpha_.to_code(symbol, c)) throw std::invalid_argument("BWT symbol missing from alphabet");
        return c;
    }

    uint64_t isa_unchecked(uint64_t p) const
    {
        const uint64_t n = size(), s = samples_.rate();
        uint64_t j = (p + s - 1) / s, steps;
        uint64_t i;
        if (j * s >= n) {
            i = samples_.isa_sample(0);
            steps = n - p;
        } else {
            i = samples_.isa_sample(j);
            steps = j * s - p;
        }
        for (; steps > 0; --steps) i = lf(i);
        return i;
    }

    alphabet alpha_;
    WT wt_;
    sa_sampling samples_;
};

}  // namespace cds
