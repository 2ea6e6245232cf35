#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"

namespace cds {

enum class rmq_kind : uint8_t { min = 0, max = 1 };

//! Range minimum (or maximum) queries over a balanced-parentheses encoding
//! of the array's super-Cartesian tree; the array itself is not retained.
/*!
 * Element i contributes one '(' and one ')'. Scanning left to right, the
 * elements strictly worse than A[i] are popped (one ')' each) before the '('
 * of i is written, so equal values stay on the stack and the leftmost of
 * them wins. For l < r with m the answer:
 *   - every excess in [open(l), open(r)) is at least depth(m) - 1;
 *   - if m > l that value is attained, rightmost, at open(m) - 1;
 *   - if m = l the minimum is excess(open(l)).
 *
 * Excess minima are kept per 64-bit block relative to the block's starting
 * excess (7 bits each), and as absolute values in 64-ary levels above.
 */
class rmq_sct {
public:
    static constexpr std::string_view magic = "CDS.RMQS";

    rmq_sct() = default;

    /// Seq needs size() and operator[] returning an ordered value.
    template <class Seq>
    explicit rmq_sct(const Seq& a, rmq_kind kind = rmq_kind::min) : kind_(kind)
    {
        const uint64_t n = a.size();
        if (n == 0) throw std::invalid_argument("rmq over an empty array");
        bit_vector bp(2 * n);
        tracked_vector<uint64_t> stack;
        uint64_t pos = 0;
        for (uint64_t i = 0; i < n; ++i) {
            const auto v = a[i];
            if (kind == rmq_kind::min)
                while (!stack.empty() && v < a[stack.back()]) stack.pop_back(), ++pos;
            else
                while (!stack.empty() && a[stack.back()] < v) stack.pop_back(), ++pos;
            bp.set(pos++);
            stack.push_back(i);
        }
        init(std::move(bp));
    }

    uint64_t size() const { return n_; }
    rmq_kind kind() const { return kind_; }

    /// Index of the extreme value in [l, r], leftmost on ties.
    uint64_t query(uint64_t l, uint64_t r) const;
    uint64_t operator()(uint64_t l, uint64_t r) const { return query(l, r); }

    /// The 2n-bit parenthesis sequence ('(' = 1).
    const plain_bv<true>& parentheses() const { return bp_; }
    uint64_t bit_size() const;

    void serialize(writer& w) const;
    void load(reader& r);

private:
    struct min_pos {
        int64_t value;
        uint64_t pos;
    };

    void init(bit_vector bp);
    void build_levels();
    int64_t excess_before(uint64_t p) const { return 2 * static_cast<int64_t>(bp_.rank(p)) - static_cast<int64_t>(p); }
    int64_t block_min(uint64_t b) const { return excess_before(64 * b) + static_cast<int64_t>(rel_min_[b]) - 64; }
    int64_t level_value(size_t level, uint64_t i) const;
    uint64_t level_size(size_t level) const;
    /// Rightmost minimum of excess over positions [x, y] within one block.
    min_pos scan(uint64_t x, uint64_t y) const;
    /// Rightmost minimum over whole blocks [a, b].
    min_pos blocks_min(uint64_t a, uint64_t b) const;
    /// Rightmost block under level node (level, i) whose minimum is v.
    uint64_t descend(size_t level, uint64_t i, int64_t v) const;

    uint64_t n_ = 0;
    rmq_kind kind_ = rmq_kind::min;
    plain_bv<true> bp_;
    int_vector rel_min_;              // per block: min excess - excess before block + 64
    std::vector<int_vector> levels_;  // levels_[k][i]: min over 64^(k+1) blocks
};

}  // namespace cds
