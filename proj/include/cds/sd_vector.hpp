#pragma once

#include <cstdint>
#include <span>

#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"

namespace cds {

//! Elias-Fano encoded sparse bitvector.
/*!
 * For m one-positions in a universe of n bits, each position is split into
 * its low w = max(1, floor(log2(n/m))) bits, stored verbatim, and its high
 * part, stored in unary: the j-th one (0-based) sets bit high_j + j of the
 * high bitvector. Only rank and select over ones are provided.
 */
class sd_vector {
public:
    static constexpr std::string_view magic = "CDS.SDVC";

    sd_vector() = default;
    /// positions must be strictly increasing and < n (std::invalid_argument otherwise).
    sd_vector(std::span<const uint64_t> positions, uint64_t n);
    explicit sd_vector(const bit_vector& bv);

    /// Incremental construction for streams of increasing positions.
    class builder {
    public:
        builder(uint64_t n, uint64_t m);
        void push(uint64_t pos);
        sd_vector finish();

    private:
        uint64_t n_, m_, count_ = 0, last_ = 0;
        unsigned w_;
        int_vector low_;
        bit_vector high_;
    };

    uint64_t size() const { return n_; }
    uint64_t ones() const { return m_; }
    unsigned low_width() const { return w_; }
    const int_vector& low() const { return low_; }
    const plain_bv<true>& high() const { return high_; }

    bool operator[](uint64_t i) const;
    bool access(uint64_t i) const
    {
        if (i >= n_) throw std::out_of_range("access position " + std::to_string(i) + " >= length " + std::to_string(n_));
        return (*this)[i];
    }
    /// Number of one-positions < i.
    uint64_t rank(uint64_t i) const;
    /// j-th smallest one-position, 1-based.
    uint64_t select(uint64_t j) const
    {
        detail::check_select_arg(j, m_);
        return select_unchecked(j);
    }
    uint64_t select_unchecked(uint64_t j) const
    {
        return ((high_.select(j) - (j - 1)) << w_) | low_[j - 1];
    }

    static unsigned low_width_for(uint64_t n, uint64_t m);

    void serialize(writer& w) const;
    void load(reader& r);

private:
    // first index in high_ of bucket h and the number of ones before it
    std::pair<uint64_t, uint64_t> bucket_start(uint64_t h) const;

    uint64_t n_ = 0;
    uint64_t m_ = 0;
    unsigned w_ = 1;
    int_vector low_{0, 0, 1};
    plain_bv<true> high_;
};

}  // namespace cds
