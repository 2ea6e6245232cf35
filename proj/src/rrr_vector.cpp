#include "cds/rrr_vector.hpp"

#include <array>
#include <stdexcept>

namespace cds {

namespace {

struct binomial_table {
    std::array<std::array<uint64_t, 65>, 65> c{};
    binomial_table()
    {
        for (unsigned n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (unsigned k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const binomial_table& table()
{
    static const binomial_table t;
    return t;
}

}  // namespace

uint64_t rrr_vector::binomial(unsigned n, unsigned k)
{
    if (k > n || n > 64) return 0;
    return table().c[n][k];
}

std::pair<unsigned, uint64_t> rrr_vector::encode_block(uint64_t block, unsigned t)
{
    block &= bits::lo_mask(t);
    unsigned cls = 0;
    uint64_t offset = 0;
    while (block) {
        const unsigned p = static_cast<unsigned>(std::countr_zero(block));
        ++cls;
        offset += binomial(p, cls);
        block &= block - 1;
    }
    return {cls, offset};
}

uint64_t rrr_vector::decode_block(unsigned cls, uint64_t offset, unsigned t)
{
    if (cls > t) throw std::out_of_range("rrr class exceeds block size");
    if (offset >= binomial(t, cls))
        throw std::out_of_range("rrr offset " + std::to_string(offset) + " out of range for class " + std::to_string(cls));
    uint64_t block = 0;
    int p = static_cast<int>(t) - 1;
    for (unsigned i = cls; i > 0; --i) {
        // largest p with C(p, i) <= offset
        while (binomial(static_cast<unsigned>(p), i) > offset) --p;
        block |= uint64_t{1} << p;
        offset -= binomial(static_cast<unsigned>(p), i);
        --p;
    }
    return block;
}

void rrr_vector::init_widths()
{
    for (unsigned c = 0; c <= 64; ++c) ow_[c] = static_cast<uint8_t>(c <= t_ ? offset_width(t_, c) : 0);
}

rrr_vector::rrr_vector(const bit_vector& bv, unsigned t) : n_(bv.size()), t_(t)
{
    if (!supported_block_size(t)) throw std::invalid_argument("unsupported rrr block size " + std::to_string(t));
    init_widths();
    const uint64_t nblocks = (n_ + t - 1) / t;
    classes_ = int_vector(nblocks, 0, bits::width_for(t));
    uint64_t offset_bits = 0;
    for (uint64_t b = 0; b < nblocks; ++b) {
        auto [cls, off] = encode_block(bv.get_word(b * t), t);
        classes_.set(b, cls);
        offset_bits += offset_width(t, cls);
        ones_ += cls;
    }
    const uint64_t nsb = nblocks / blocks_per_superblock + 1;
    sb_rank_ = int_vector(nsb, 0, bits::width_for(ones_));
    sb_ptr_ = int_vector(nsb, 0, bits::width_for(offset_bits));
    offsets_ = bit_vector(offset_bits);
    uint64_t rank = 0, ptr = 0;
    for (uint64_t b = 0; b < nblocks; ++b) {
        if (b % blocks_per_superblock == 0) {
            sb_rank_.set(b / blocks_per_superblock, rank);
            sb_ptr_.set(b / blocks_per_superblock, ptr);
        }
        auto [cls, off] = encode_block(bv.get_word(b * t), t);
        const unsigned w = offset_width(t, cls);
        for (unsigned k = 0; k < w; ++k)
            if ((off >> k) & 1) offsets_.set(ptr + k);
        ptr += w;
        rank += cls;
    }
    if (nblocks % blocks_per_superblock == 0) {
        sb_rank_.set(nblocks / blocks_per_superblock, rank);
        sb_ptr_.set(nblocks / blocks_per_superblock, ptr);
    }
}

std::pair<uint64_t, uint64_t> rrr_vector::locate(uint64_t blk) const
{
    const uint64_t sb = blk / blocks_per_superblock;
    uint64_t r = sb_rank_[sb], ptr = sb_ptr_[sb];
    for (uint64_t b = sb * blocks_per_superblock; b < blk; ++b) {
        const unsigned c = static_cast<unsigned>(classes_[b]);
        r += c;
        ptr += ow_[c];
    }
    return {r, ptr};
}

uint64_t rrr_vector::block_bits(uint64_t blk, uint64_t ptr) const
{
    const unsigned c = static_cast<unsigned>(classes_[blk]);
    if (c == 0) return 0;
    if (c == t_) return bits::lo_mask(t_);
    const unsigned w = ow_[c];
    return decode_block(c, offsets_.get_word(ptr) & bits::lo_mask(w), t_);
}

bool rrr_vector::operator[](uint64_t i) const
{
    const uint64_t blk = i / t_;
    auto [r, ptr] = locate(blk);
    return (block_bits(blk, ptr) >> (i % t_)) & 1;
}

uint64_t rrr_vector::rank(uint64_t i) const
{
    detail::check_rank_arg(i, n_);
    if (i == n_) return ones_;
    const uint64_t blk = i / t_;
    auto [r, ptr] = locate(blk);
    const unsigned in = static_cast<unsigned>(i % t_);
    if (in == 0) return r;
    return r + bits::popcount(block_bits(blk, ptr) & bits::lo_mask(in));
}

uint64_t rrr_vector::select(uint64_t j) const
{
    detail::check_select_arg(j, ones_);
    uint64_t lo = 0, hi = sb_rank_.size() - 1;
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo + 1) / 2;
        if (sb_rank_[mid] < j) lo = mid;
        else hi = mid - 1;
    }
    uint64_t blk = lo * blocks_per_superblock;
    uint64_t r = sb_rank_[lo], ptr = sb_ptr_[lo];
    for (;; ++blk) {
        const unsigned c = static_cast<unsigned>(classes_[blk]);
        if (r + c >= j) break;
        r += c;
        ptr += ow_[c];
    }
    return blk * t_ + bits::select_in_word(block_bits(blk, ptr), static_cast<unsigned>(j - r - 1));
}

uint64_t rrr_vector::select0(uint64_t j) const
{
    detail::check_select_arg(j, n_ - ones_);
    const uint64_t sb_len = blocks_per_superblock * t_;
    uint64_t lo = 0, hi = sb_rank_.size() - 1;
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * sb_len - sb_rank_[mid] < j) lo = mid;
        else hi = mid - 1;
    }
    uint64_t blk = lo * blocks_per_superblock;
    uint64_t z = lo * sb_len - sb_rank_[lo], ptr = sb_ptr_[lo];
    for (;; ++blk) {
        const unsigned c = static_cast<unsigned>(classes_[blk]);
        if (z + (t_ - c) >= j) break;
        z += t_ - c;
        ptr += ow_[c];
    }
    const uint64_t inv = ~block_bits(blk, ptr) & bits::lo_mask(t_);
    return blk * t_ + bits::select_in_word(inv, static_cast<unsigned>(j - z - 1));
}

void rrr_vector::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(t_), n_);
    w.put_u64(ones_);
    write_child(w, "classes", classes_);
    write_child(w, "offsets", offsets_);
    write_child(w, "superblock_rank", sb_rank_);
    write_child(w, "superblock_ptr", sb_ptr_);
}

void rrr_vector::load(reader& r)
{
    frame_header h = read_header(r, magic);
    if (!supported_block_size(h.param)) throw format_error("unsupported rrr block size in file");
    t_ = h.param;
    init_widths();
    n_ = h.len;
    ones_ = r.get_u64();
    classes_.load(r);
    offsets_.load(r);
    sb_rank_.load(r);
    sb_ptr_.load(r);
}

}  // namespace cds
