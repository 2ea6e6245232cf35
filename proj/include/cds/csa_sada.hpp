#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cds/alphabet.hpp"
#include "cds/sa_sampling.hpp"
#include "cds/sd_vector.hpp"

namespace cds {

//! Compressed suffix array built on Psi.
/*!
 * Psi restricted to the suffixes starting with code c is strictly increasing.
 * Each such run is shifted by c*n and all runs are concatenated into one
 * increasing sequence stored as a single sd_vector over [0, sigma*n). The
 * i-th element therefore yields both Psi[i] (mod n) and the first code of
 * suffix i (div n), and backward search is two rank calls per symbol.
 */
class csa_sada {
public:
    static constexpr std::string_view magic = "CDS.CSAS";

    csa_sada() = default;
    /// Builds from an in-memory text (last symbol must be the unique 0).
    csa_sada(const int_vector& text, alphabet_mode mode, uint64_t text_sigma, sample_order kind = sample_order::text,
             uint64_t rate = 32);
    /// Builds from precomputed Psi and a sequential SA source.
    template <class Source>
    csa_sada(alphabet alpha, const int_vector& psi, Source& sa, sample_order kind, uint64_t rate)
        : alpha_(std::move(alpha))
    {
        init_psi(psi);
        samples_ = sa_sampling(sa, size(), kind, rate);
    }

    uint64_t size() const { return alpha_.size(); }
    const alphabet& alpha() const { return alpha_; }
    const sa_sampling& samples() const { return samples_; }

    uint64_t psi(uint64_t i) const { return psi_.select_unchecked(i + 1) % size(); }
    /// Text symbol T[SA[i]].
    uint64_t first_symbol(uint64_t i) const { return alpha_.to_symbol(psi_.select_unchecked(i + 1) / size()); }

    /// Suffixes prefixed by pattern (text symbols); the empty pattern matches all.
    sa_range backward_search(std::span<const uint64_t> pattern) const;
    uint64_t count(std::span<const uint64_t> pattern) const { return backward_search(pattern).len; }

    /// Throws std::out_of_range for i >= size().
    uint64_t sa(uint64_t i) const;
    uint64_t isa(uint64_t p) const;
    /// T[l..r]; throws std::out_of_range unless l <= r < size().
    std::vector<uint64_t> extract(uint64_t l, uint64_t r) const;

    void serialize(writer& w) const;
    void load(reader& r);

private:
    void init_psi(const int_vector& psi);
    uint64_t isa_unchecked(uint64_t p) const;

    alphabet alpha_;
    sd_vector psi_;
    sa_sampling samples_;
};

}  // namespace cds
