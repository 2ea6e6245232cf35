#pragma once

#include <cstdint>
#include <string>

#include "cds/int_vector.hpp"

namespace cds {

//! Two-word-per-superblock rank directory over a bit_vector.
/*!
 * Every 2048-bit superblock owns two interleaved 64-bit entries: the
 * absolute number of ones before the superblock, and five 11-bit counts of
 * ones before each 384-bit sub-block inside it. A query adds at most six
 * word popcounts. Overhead is 128 bits per 2048, i.e. 6.25%.
 *
 * The directory does not own the bits; callers pass the same vector it was
 * built from.
 */
class rank_support_v5 {
public:
    static constexpr std::string_view magic = "CDS.RNK5";
    static constexpr uint64_t superblock_bits = 2048;
    static constexpr uint64_t words_per_sub = 6;

    rank_support_v5() = default;
    explicit rank_support_v5(const bit_vector& bv);

    /// Ones in [0, i). Requires i <= bv.size().
    uint64_t rank(const bit_vector& bv, uint64_t i) const
    {
        if (i >= n_) return ones_;
        const uint64_t sb = i >> 11;
        uint64_t r = dir_[2 * sb];
        const uint64_t w = i >> 6;
        const uint64_t wsb = sb << 5;
        const uint64_t sub = (w - wsb) / words_per_sub;
        if (sub) r += (dir_[2 * sb + 1] >> (11 * (sub - 1))) & 0x7FF;
        const uint64_t* d = bv.data();
        for (uint64_t k = wsb + sub * words_per_sub; k < w; ++k) r += bits::popcount(d[k]);
        if (i & 63) r += bits::popcount(d[w] & bits::lo_mask(i & 63));
        return r;
    }

    uint64_t ones() const { return ones_; }
    uint64_t size() const { return n_; }
    uint64_t superblocks() const { return dir_.size() / 2; }
    uint64_t ones_before_superblock(uint64_t sb) const { return dir_[2 * sb]; }

    /// Position of the j-th one (1-based j), searching superblocks [lo, hi].
    uint64_t select1(const bit_vector& bv, uint64_t j, uint64_t lo, uint64_t hi) const;
    /// Position of the j-th zero (1-based j).
    uint64_t select0(const bit_vector& bv, uint64_t j) const;

    void serialize(writer& w) const;
    void load(reader& r);

private:
    uint64_t sub_rel(uint64_t sb, uint64_t sub) const
    {
        return sub ? (dir_[2 * sb + 1] >> (11 * (sub - 1))) & 0x7FF : 0;
    }

    uint64_t n_ = 0;
    uint64_t ones_ = 0;
    int_vector dir_;
};

//! Sampled select directory: the position of every 4096th one narrows the
//! superblock range that select1 binary-searches.
class select_support_sampled {
public:
    static constexpr std::string_view magic = "CDS.SEL1";
    static constexpr uint64_t sample_rate = 4096;

    select_support_sampled() = default;
    select_support_sampled(const bit_vector& bv, const rank_support_v5& rs);

    uint64_t select(const bit_vector& bv, const rank_support_v5& rs, uint64_t j) const;

    void serialize(writer& w) const;
    void load(reader& r);

private:
    int_vector samples_;
};

}  // namespace cds
