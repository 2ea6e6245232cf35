#include "cds/rank_support.hpp"

namespace cds {

rank_support_v5::rank_support_v5(const bit_vector& bv) : n_(bv.size())
{
    const uint64_t sbs = (n_ + superblock_bits - 1) / superblock_bits;
    dir_ = int_vector(2 * sbs, 0, 64);
    const uint64_t words = bv.word_count();
    const uint64_t* d = bv.data();
    uint64_t total = 0;
    for (uint64_t sb = 0; sb < sbs; ++sb) {
        dir_.set(2 * sb, total);
        uint64_t rel = 0, packed = 0;
        for (uint64_t k = 0; k < 32; ++k) {
            if (k && k % words_per_sub == 0) packed |= rel << (11 * (k / words_per_sub - 1));
            const uint64_t w = sb * 32 + k;
            if (w < words) rel += bits::popcount(d[w]);
        }
        dir_.set(2 * sb + 1, packed);
        total += rel;
    }
    ones_ = total;
}

uint64_t rank_support_v5::select1(const bit_vector& bv, uint64_t j, uint64_t lo, uint64_t hi) const
{
    // last superblock whose prefix count is < j
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo + 1) / 2;
        if (dir_[2 * mid] < j) lo = mid;
        else hi = mid - 1;
    }
    const uint64_t sb = lo;
    uint64_t left = j - dir_[2 * sb];
    uint64_t sub = 0;
    while (sub < 5 && sub_rel(sb, sub + 1) < left) ++sub;
    left -= sub_rel(sb, sub);
    const uint64_t* d = bv.data();
    uint64_t w = sb * 32 + sub * words_per_sub;
    for (;; ++w) {
        const uint64_t c = bits::popcount(d[w]);
        if (left <= c) break;
        left -= c;
    }
    return w * 64 + bits::select_in_word(d[w], static_cast<unsigned>(left - 1));
}

uint64_t rank_support_v5::select0(const bit_vector& bv, uint64_t j) const
{
    uint64_t lo = 0, hi = superblocks() - 1;
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * superblock_bits - dir_[2 * mid] < j) lo = mid;
        else hi = mid - 1;
    }
    const uint64_t sb = lo;
    uint64_t left = j - (sb * superblock_bits - dir_[2 * sb]);
    uint64_t sub = 0;
    while (sub < 5 && (sub + 1) * words_per_sub * 64 - sub_rel(sb, sub + 1) < left) ++sub;
    left -= sub * words_per_sub * 64 - sub_rel(sb, sub);
    const uint64_t* d = bv.data();
    uint64_t w = sb * 32 + sub * words_per_sub;
    for (;; ++w) {
        const uint64_t c = 64 - bits::popcount(d[w]);
        if (left <= c) break;
        left -= c;
    }
    return w * 64 + bits::select_in_word(~d[w], static_cast<unsigned>(left - 1));
}

void rank_support_v5::serialize(writer& w) const
{
    write_header(w, magic, 0, n_);
    w.put_u64(ones_);
    write_child(w, "directory", dir_);
}

void rank_support_v5::load(reader& r)
{
    n_ = read_header(r, magic).len;
    ones_ = r.get_u64();
    dir_.load(r);
}

select_support_sampled::select_support_sampled(const bit_vector& bv, const rank_support_v5& rs)
{
    const uint64_t ones = rs.ones();
    const uint64_t count = (ones + sample_rate - 1) / sample_rate;
    samples_ = int_vector(count, 0, bits::width_for(bv.size()));
    uint64_t seen = 0, k = 0;
    const uint64_t* d = bv.data();
    for (uint64_t w = 0; w < bv.word_count() && k < count; ++w) {
        uint64_t x = d[w];
        const uint64_t c = bits::popcount(x);
        // next sampled ordinal is k*rate + 1 (1-based)
        while (k < count && seen + c >= k * sample_rate + 1) {
            const uint64_t within = k * sample_rate - seen;  // 0-based rank inside word
            samples_.set(k, w * 64 + bits::select_in_word(x, static_cast<unsigned>(within)));
            ++k;
        }
        seen += c;
    }
}

uint64_t select_support_sampled::select(const bit_vector& bv, const rank_support_v5& rs, uint64_t j) const
{
    const uint64_t k = (j - 1) / sample_rate;
    const uint64_t lo = samples_[k] / rank_support_v5::superblock_bits;
    const uint64_t hi = k + 1 < samples_.size() ? samples_[k + 1] / rank_support_v5::superblock_bits
                                                : rs.superblocks() - 1;
    return rs.select1(bv, j, lo, hi);
}

void select_support_sampled::serialize(writer& w) const
{
    write_header(w, magic, 0, samples_.size());
    write_child(w, "samples", samples_);
}

void select_support_sampled::load(reader& r)
{
    read_header(r, magic);
    samples_.load(r);
}

}  // namespace cds
