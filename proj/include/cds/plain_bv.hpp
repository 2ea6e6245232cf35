#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

#include "cds/rank_support.hpp"

namespace cds {

/// The access/rank/select contract shared by every bitvector backend.
/// rank(i) counts ones in [0, i); select(j) returns the 0-based position of
/// the j-th one, j >= 1.
template <class T>
concept rank_select_bitvector = requires(const T& b, uint64_t i, writer& w, reader& r, T& m) {
    { b.size() } -> std::convertible_to<uint64_t>;
    { b[i] } -> std::convertible_to<bool>;
    { b.rank(i) } -> std::convertible_to<uint64_t>;
    { b.select(i) } -> std::convertible_to<uint64_t>;
    { b.ones() } -> std::convertible_to<uint64_t>;
    b.serialize(w);
    m.load(r);
};

/// Backends usable inside wavelet trees also answer rank0/select0.
template <class T>
concept wt_bitvector = rank_select_bitvector<T> && requires(const T& b, uint64_t i) {
    { b.rank0(i) } -> std::convertible_to<uint64_t>;
    { b.select0(i) } -> std::convertible_to<uint64_t>;
};

namespace detail {
inline void check_rank_arg(uint64_t i, uint64_t n)
{
    if (i > n) throw std::out_of_range("rank position " + std::to_string(i) + " > length " + std::to_string(n));
}
inline void check_select_arg(uint64_t j, uint64_t count)
{
    if (j == 0 || j > count)
        throw std::out_of_range("select ordinal " + std::to_string(j) + " outside [1," + std::to_string(count) + "]");
}
}  // namespace detail

//! Uncompressed bitvector with a rank_support_v5 directory and, when
//! WithSelect is set, sampled select support. Without samples select still
//! works by binary search over the rank directory.
template <bool WithSelect = true>
class plain_bv {
public:
    static constexpr std::string_view magic = WithSelect ? "CDS.BVPS" : "CDS.BVPR";
    static constexpr uint8_t backend_tag = WithSelect ? 1 : 2;

    plain_bv() = default;
    explicit plain_bv(bit_vector bv) : bv_(std::move(bv)), rank_(bv_)
    {
        if constexpr (WithSelect) select_ = select_support_sampled(bv_, rank_);
    }

    uint64_t size() const { return bv_.size(); }
    uint64_t ones() const { return rank_.ones(); }
    bool operator[](uint64_t i) const { return bv_[i]; }
    bool access(uint64_t i) const
    {
        if (i >= size()) throw std::out_of_range("access position " + std::to_string(i) + " >= length " + std::to_string(size()));
        return bv_[i];
    }

    uint64_t rank(uint64_t i) const
    {
        detail::check_rank_arg(i, size());
        return rank_.rank(bv_, i);
    }
    uint64_t rank0(uint64_t i) const { return i - rank(i); }

    uint64_t select(uint64_t j) const
    {
        detail::check_select_arg(j, ones());
        if constexpr (WithSelect) return select_.select(bv_, rank_, j);
        else return rank_.select1(bv_, j, 0, rank_.superblocks() - 1);
    }
    uint64_t select0(uint64_t j) const
    {
        detail::check_select_arg(j, size() - ones());
        return rank_.select0(bv_, j);
    }

    const bit_vector& bits() const { return bv_; }

    void serialize(writer& w) const
    {
        write_header(w, magic, 0, size());
        write_child(w, "bits", bv_);
        write_child(w, "rank", rank_);
        if constexpr (WithSelect) write_child(w, "select", select_);
    }
    void load(reader& r)
    {
        read_header(r, magic);
        bv_.load(r);
        rank_.load(r);
        if constexpr (WithSelect) select_.load(r);
    }

private:
    bit_vector bv_;
    rank_support_v5 rank_;
    [[no_unique_address]] std::conditional_t<WithSelect, select_support_sampled, std::monostate> select_;
};

}  // namespace cds
