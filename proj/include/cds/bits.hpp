#pragma once

#include <bit>
#include <cstdint>

namespace cds::bits {

inline constexpr uint64_t lo_mask(unsigned width)
{
    return width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

inline constexpr unsigned popcount(uint64_t x) { return static_cast<unsigned>(std::popcount(x)); }

/// Number of bits needed to write any value in [0, x]; at least 1.
inline constexpr unsigned width_for(uint64_t x)
{
    return x == 0 ? 1u : static_cast<unsigned>(std::bit_width(x));
}

/// ceil(log2(x)) for x >= 1.
inline constexpr unsigned ceil_log2(uint64_t x)
{
    return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

/// floor(log2(x)) for x >= 1.
inline constexpr unsigned floor_log2(uint64_t x)
{
    return x == 0 ? 0u : static_cast<unsigned>(std::bit_width(x) - 1);
}

/// Position of the k-th set bit (k is 0-based) in x. Requires k < popcount(x).
inline unsigned select_in_word(uint64_t x, unsigned k)
{
    unsigned base = 0;
    for (;;) {
        unsigned c = popcount(x & 0xFF);
        if (k < c) break;
        k -= c;
        x >>= 8;
        base += 8;
    }
    for (unsigned i = 0; i < k; ++i) x &= x - 1;
    return base + static_cast<unsigned>(std::countr_zero(x));
}

}  // namespace cds::bits
