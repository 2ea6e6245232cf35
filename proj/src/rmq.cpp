#include "cds/rmq.hpp"

#include <array>
#include <limits>

namespace cds {

namespace {

struct byte_excess {
    std::array<int8_t, 256> delta{};
    std::array<int8_t, 256> min{};  // over prefixes of length 1..8
    std::array<uint8_t, 256> argmin{};  // rightmost
};

constexpr byte_excess make_byte_table()
{
    byte_excess t;
    for (int v = 0; v < 256; ++v) {
        int e = 0, m = 9, at = 0;
        for (int k = 0; k < 8; ++k) {
            e += (v >> k) & 1 ? 1 : -1;
            if (e <= m) m = e, at = k;
        }
        t.delta[v] = static_cast<int8_t>(e);
        t.min[v] = static_cast<int8_t>(m);
        t.argmin[v] = static_cast<uint8_t>(at);
    }
    return t;
}

constexpr byte_excess byte_table = make_byte_table();

constexpr int64_t none = std::numeric_limits<int64_t>::max();

}  // namespace

void rmq_sct::init(bit_vector bp)
{
    n_ = bp.size() / 2;
    bp_ = plain_bv<true>(std::move(bp));
    const uint64_t blocks = (2 * n_ + 63) / 64;
    rel_min_ = int_vector(blocks, 0, 7);
    for (uint64_t b = 0; b < blocks; ++b) {
        const uint64_t x = 64 * b, y = std::min(x + 63, 2 * n_ - 1);
        rel_min_.set(b, static_cast<uint64_t>(scan(x, y).value - excess_before(x) + 64));
    }
    build_levels();
}

void rmq_sct::build_levels()
{
    levels_.clear();
    const unsigned width = bits::width_for(n_);
    for (size_t level = 0; level_size(level) > 1; ++level) {
        const uint64_t m = level_size(level);
        int_vector up((m + 63) / 64, 0, width);
        for (uint64_t i = 0; i < up.size(); ++i) {
            int64_t v = none;
            for (uint64_t c = 64 * i; c < std::min(m, 64 * i + 64); ++c) v = std::min(v, level_value(level, c));
            up.set(i, static_cast<uint64_t>(v));
        }
        levels_.push_back(std::move(up));
    }
}

uint64_t rmq_sct::level_size(size_t level) const
{
    return level == 0 ? rel_min_.size() : levels_[level - 1].size();
}

int64_t rmq_sct::level_value(size_t level, uint64_t i) const
{
    return level == 0 ? block_min(i) : static_cast<int64_t>(levels_[level - 1][i]);
}

rmq_sct::min_pos rmq_sct::scan(uint64_t x, uint64_t y) const
{
    const uint64_t* d = bp_.bits().data();
    int64_t cur = excess_before(x);
    min_pos best{none, x};
    for (uint64_t p = x; p <= y;) {
        if ((p & 7) == 0 && p + 7 <= y) {
            const unsigned byte = (d[p >> 6] >> (p & 63)) & 0xFF;
            const int64_t cand = cur + byte_table.min[byte];
            if (cand <= best.value) best = {cand, p + byte_table.argmin[byte]};
            cur += byte_table.delta[byte];
            p += 8;
        } else {
            cur += (d[p >> 6] >> (p & 63)) & 1 ? 1 : -1;
            if (cur <= best.value) best = {cur, p};
            ++p;
        }
    }
    return best;
}

uint64_t rmq_sct::descend(size_t level, uint64_t i, int64_t v) const
{
    for (; level > 0; --level) {
        const uint64_t lo = 64 * i, hi = std::min(level_size(level - 1), lo + 64);
        uint64_t c = hi;
        while (c-- > lo)
            if (level_value(level - 1, c) == v) break;
        i = c;
    }
    return i;
}

rmq_sct::min_pos rmq_sct::blocks_min(uint64_t a, uint64_t b) const
{
    // Rightmost minimum over entries [a, b] of one level, in that level's index.
    struct searcher {
        const rmq_sct& s;
        min_pos run(size_t level, uint64_t a, uint64_t b) const
        {
            min_pos best{none, a};
            auto sweep = [&](uint64_t lo, uint64_t hi) {
                for (uint64_t i = lo; i <= hi; ++i) {
                    const int64_t v = s.level_value(level, i);
                    if (v <= best.value) best = {v, i};
                }
            };
            if (a / 64 == b / 64 || level == s.levels_.size()) {
                sweep(a, b);
                return best;
            }
            const uint64_t pa = (a + 63) / 64, pb = (b + 1) / 64;  // full parents [pa, pb)
            if (a < 64 * pa) sweep(a, 64 * pa - 1);
            if (pa < pb) {
                const min_pos up = run(level + 1, pa, pb - 1);
                if (up.value <= best.value) best = {up.value, s.descend(level + 1, up.pos, up.value)};
            }
            if (64 * pb <= b) sweep(std::max(64 * pb, a), b);
            return best;
        }
    };
    return searcher{*this}.run(0, a, b);
}

uint64_t rmq_sct::query(uint64_t l, uint64_t r) const
{
    if (l > r || r >= n_)
        throw std::out_of_range("rmq range [" + std::to_string(l) + "," + std::to_string(r) + "] outside [0," +
                                std::to_string(n_) + ")");
    if (l == r) return l;
    const uint64_t x = bp_.select(l + 1), y = bp_.select(r + 1) - 1;
    const uint64_t bx = x / 64, by = y / 64;
    min_pos m;
    if (bx == by) {
        m = scan(x, y);
    } else {
        m = scan(x, 64 * bx + 63);
        if (bx + 1 < by) {
            const min_pos mb = blocks_min(bx + 1, by - 1);
            if (mb.value <= m.value) m = scan(64 * mb.pos, 64 * mb.pos + 63);
        }
        const min_pos last = scan(64 * by, y);
        if (last.value <= m.value) m = last;
    }
    if (m.value == excess_before(x) + 1) return l;
    return bp_.rank(m.pos + 2) - 1;
}

uint64_t rmq_sct::bit_size() const
{
    writer w(nullptr);
    serialize(w);
    return 8 * w.bytes_written();
}

void rmq_sct::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(kind_), n_);
    write_child(w, "bp", bp_);
    write_child(w, "block_min", rel_min_);
    w.put_u64(levels_.size());
    for (size_t k = 0; k < levels_.size(); ++k) write_child(w, "level_" + std::to_string(k + 1), levels_[k]);
}

void rmq_sct::load(reader& r)
{
    frame_header h = read_header(r, magic);
    if (h.param > 1) throw format_error("unknown rmq kind tag");
    kind_ = static_cast<rmq_kind>(h.param);
    n_ = h.len;
    bp_.load(r);
    rel_min_.load(r);
    const uint64_t k = r.get_u64();
    if (bp_.size() != 2 * n_ || bp_.ones() != n_ || rel_min_.size() != (2 * n_ + 63) / 64 || k > 64)
        throw format_error("rmq components disagree with header");
    levels_.assign(k, int_vector());
    for (auto& lv : levels_) lv.load(r);
}

}  // namespace cds
