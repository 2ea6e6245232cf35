#include "cds/sd_vector.hpp"

#include <stdexcept>
#include <vector>

namespace cds {

unsigned sd_vector::low_width_for(uint64_t n, uint64_t m)
{
    if (m == 0 || n / m < 2) return 1;
    return std::max(1u, bits::floor_log2(n / m));
}

sd_vector::builder::builder(uint64_t n, uint64_t m) : n_(n), m_(m), w_(low_width_for(n, m))
{
    if (m > n) throw std::invalid_argument("sd_vector: more ones than universe positions");
    low_ = int_vector(m, 0, w_);
    high_ = bit_vector(n == 0 ? 0 : m + ((n - 1) >> w_) + 1);
}

void sd_vector::builder::push(uint64_t pos)
{
    if (count_ >= m_) throw std::invalid_argument("sd_vector: more positions than announced");
    if (pos >= n_) throw std::invalid_argument("sd_vector: position " + std::to_string(pos) + " outside universe");
    if (count_ > 0 && pos <= last_) throw std::invalid_argument("sd_vector: positions must be strictly increasing");
    low_.set(count_, pos & bits::lo_mask(w_));
    high_.set((pos >> w_) + count_);
    last_ = pos;
    ++count_;
}

sd_vector sd_vector::builder::finish()
{
    if (count_ != m_) throw std::invalid_argument("sd_vector: fewer positions than announced");
    sd_vector v;
    v.n_ = n_;
    v.m_ = m_;
    v.w_ = w_;
    v.low_ = std::move(low_);
    v.high_ = plain_bv<true>(std::move(high_));
    return v;
}

sd_vector::sd_vector(std::span<const uint64_t> positions, uint64_t n)
{
    builder b(n, positions.size());
    for (uint64_t p : positions) b.push(p);
    *this = b.finish();
}

sd_vector::sd_vector(const bit_vector& bv)
{
    builder b(bv.size(), bv.count_ones());
    for (uint64_t i = 0; i < bv.size(); ++i)
        if (bv[i]) b.push(i);
    *this = b.finish();
}

std::pair<uint64_t, uint64_t> sd_vector::bucket_start(uint64_t h) const
{
    const uint64_t start = h == 0 ? 0 : high_.select0(h) + 1;
    return {start, start - h};
}

uint64_t sd_vector::rank(uint64_t i) const
{
    detail::check_rank_arg(i, n_);
    if (i == n_) return m_;
    auto [pos, k] = bucket_start(i >> w_);
    const uint64_t lo = i & bits::lo_mask(w_);
    while (pos < high_.size() && high_[pos] && low_[k] < lo) {
        ++pos;
        ++k;
    }
    return k;
}

bool sd_vector::operator[](uint64_t i) const
{
    auto [pos, k] = bucket_start(i >> w_);
    const uint64_t lo = i & bits::lo_mask(w_);
    while (pos < high_.size() && high_[pos]) {
        const uint64_t v = low_[k];
        if (v == lo) return true;
        if (v > lo) return false;
        ++pos;
        ++k;
    }
    return false;
}

void sd_vector::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(w_), n_);
    w.put_u64(m_);
    write_child(w, "low", low_);
    write_child(w, "high", high_);
}

void sd_vector::load(reader& r)
{
    frame_header h = read_header(r, magic);
    n_ = h.len;
    w_ = h.param;
    m_ = r.get_u64();
    low_.load(r);
    high_.load(r);
    if (w_ < 1 || w_ > 64 || low_.size() != m_) throw format_error("inconsistent sd_vector");
}

}  // namespace cds
