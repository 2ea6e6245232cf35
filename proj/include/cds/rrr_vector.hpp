#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"

namespace cds {

//! RRR-compressed bitvector with on-the-fly block decoding.
/*!
 * The input is cut into blocks of t bits (t in {15, 31, 63}). Each block is
 * stored as its class c (popcount) and an offset of ceil(log2 C(t,c)) bits
 * identifying the block among all t-bit patterns with c ones. Offsets use
 * colexicographic order: a set {p_1 < ... < p_c} of one-positions has offset
 * sum_i C(p_i, i), so the lowest set bit varies fastest. Every 32 blocks a
 * superblock entry stores the absolute rank and the offset-stream pointer.
 */
class rrr_vector {
public:
    static constexpr std::string_view magic = "CDS.RRRV";
    static constexpr uint8_t backend_tag = 3;
    static constexpr uint64_t blocks_per_superblock = 32;

    rrr_vector() = default;
    /// Throws std::invalid_argument unless t is 15, 31 or 63.
    explicit rrr_vector(const bit_vector& bv, unsigned t = 15);

    static bool supported_block_size(unsigned t) { return t == 15 || t == 31 || t == 63; }
    static uint64_t binomial(unsigned n, unsigned k);
    static unsigned offset_width(unsigned t, unsigned cls) { return bits::ceil_log2(binomial(t, cls)); }
    /// (class, offset) of the low t bits of block.
    static std::pair<unsigned, uint64_t> encode_block(uint64_t block, unsigned t);
    /// Inverse of encode_block; throws std::out_of_range for invalid pairs.
    static uint64_t decode_block(unsigned cls, uint64_t offset, unsigned t);

    uint64_t size() const { return n_; }
    uint64_t ones() const { return ones_; }
    unsigned block_size() const { return t_; }

    bool operator[](uint64_t i) const;
    bool access(uint64_t i) const
    {
        if (i >= n_) throw std::out_of_range("access position " + std::to_string(i) + " >= length " + std::to_string(n_));
        return (*this)[i];
    }
    uint64_t rank(uint64_t i) const;
    uint64_t rank0(uint64_t i) const { return i - rank(i); }
    uint64_t select(uint64_t j) const;
    uint64_t select0(uint64_t j) const;

    void serialize(writer& w) const;
    void load(reader& r);

private:
    // Walks from the block's superblock to block blk; returns (ones before, offset pointer).
    std::pair<uint64_t, uint64_t> locate(uint64_t blk) const;
    uint64_t block_bits(uint64_t blk, uint64_t ptr) const;
    void init_widths();

    uint64_t n_ = 0;
    uint64_t ones_ = 0;
    unsigned t_ = 15;
    int_vector classes_;
    bit_vector offsets_;
    int_vector sb_rank_;
    int_vector sb_ptr_;
    std::array<uint8_t, 65> ow_{};
};

}  // namespace cds
