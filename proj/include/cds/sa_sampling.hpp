#pragma once

#include <cstdint>
#include <string>

#include "cds/int_vector.hpp"
#include "cds/sd_vector.hpp"

namespace cds {

enum class sample_order : uint8_t { suffix = 0, text = 1 };

std::string_view to_string(sample_order o);

//! SA and ISA samples at rate s.
/*!
 * Suffix order keeps SA[i] for every i divisible by s. Text order keeps
 * SA[i] for every i with SA[i] divisible by s: an sd_vector marks those i,
 * and values SA[i]/s are listed in SA order. Both keep ISA[j*s] for all j;
 * text order stores the inverse of the value list and reaches ISA through
 * select on the marks.
 *
 * With text order every suffix reaches a sample in at most s-1 forward
 * steps; suffix order gives no such bound.
 */
class sa_sampling {
public:
    static constexpr std::string_view magic = "CDS.SAMP";

    sa_sampling() = default;

    /// Consumes n values of SA from src (anything with next()).
    template <class Source>
    sa_sampling(Source& src, uint64_t n, sample_order kind, uint64_t rate)
        : kind_(kind), rate_(rate == 0 ? 1 : rate), n_(n)
    {
        const uint64_t m = n == 0 ? 0 : (n - 1) / rate_ + 1;  // sampled text positions
        const unsigned vw = bits::width_for(n == 0 ? 0 : n - 1);
        if (kind == sample_order::suffix) {
            sa_ = int_vector(m, 0, vw);
            isa_ = int_vector(m, 0, vw);
            for (uint64_t i = 0; i < n; ++i) {
                const uint64_t v = src.next();
                if (i % rate_ == 0) sa_.set(i / rate_, v);
                if (v % rate_ == 0) isa_.set(v / rate_, i);
            }
            return;
        }
        const unsigned kw = bits::width_for(m == 0 ? 0 : m - 1);
        sa_ = int_vector(m, 0, kw);
        isa_ = int_vector(m, 0, kw);
        sd_vector::builder marks(n, m);
        uint64_t k = 0;
        for (uint64_t i = 0; i < n; ++i) {
            const uint64_t v = src.next();
            if (v % rate_ != 0) continue;
            marks.push(i);
            sa_.set(k, v / rate_);
            isa_.set(v / rate_, k);
            ++k;
        }
        marks_ = marks.finish();
    }

    sample_order kind() const { return kind_; }
    uint64_t rate() const { return rate_; }
    uint64_t size() const { return n_; }

    /// SA[i] if position i is sampled.
    bool sa_sample(uint64_t i, uint64_t& value) const
    {
        if (kind_ == sample_order::suffix) {
            if (i % rate_) return false;
            value = sa_[i / rate_];
            return true;
        }
        const uint64_t r = marks_.rank(i);
        if (r == marks_.ones() || marks_.select_unchecked(r + 1) != i) return false;
        value = sa_[r] * rate_;
        return true;
    }

    /// ISA[j * rate] for j * rate < n.
    uint64_t isa_sample(uint64_t j) const
    {
        if (kind_ == sample_order::suffix) return isa_[j];
        return marks_.select_unchecked(isa_[j] + 1);
    }

    void serialize(writer& w) const;
    void load(reader& r);

private:
    sample_order kind_ = sample_order::text;
    uint64_t rate_ = 1;
    uint64_t n_ = 0;
    int_vector sa_;
    int_vector isa_;
    sd_vector marks_;
};

}  // namespace cds
