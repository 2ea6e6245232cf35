#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "cds/plain_bv.hpp"
#include "cds/rrr_vector.hpp"
#include "cds/sd_vector.hpp"
#include "oracles.hpp"

using namespace cds;

namespace {

template <class T>
std::string to_bytes(const T& obj)
{
    std::ostringstream out;
    writer w(&out);
    obj.serialize(w);
    return out.str();
}

template <class T>
T from_bytes(const std::string& s)
{
    std::istringstream in(s);
    reader r(in);
    T obj;
    obj.load(r);
    return obj;
}

bit_vector random_bits(uint64_t n, double density, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    bit_vector bv(n);
    for (uint64_t i = 0; i < n; ++i)
        if (coin(rng)) bv.set(i);
    return bv;
}

std::vector<uint64_t> one_positions(const bit_vector& bv)
{
    std::vector<uint64_t> p;
    for (uint64_t i = 0; i < bv.size(); ++i)
        if (bv[i]) p.push_back(i);
    return p;
}

}  // namespace

TEST(rrr, extreme_classes)
{
    EXPECT_EQ(rrr_vector::encode_block(0, 15), std::make_pair(0u, uint64_t{0}));
    EXPECT_EQ(rrr_vector::encode_block(0x7fff, 15), std::make_pair(15u, uint64_t{0}));
    EXPECT_EQ(rrr_vector::decode_block(0, 0, 15), 0u);
    EXPECT_EQ(rrr_vector::decode_block(15, 0, 15), 0x7fffu);
}

TEST(rrr, first_pattern_of_class_one_is_lowest_bit)
{
    // colex order: single ones enumerate by position
    for (uint64_t off = 0; off < 15; ++off) EXPECT_EQ(rrr_vector::decode_block(1, off, 15), uint64_t{1} << off);
}

TEST(rrr, decode_is_bijection_for_t15)
{
    std::vector<uint64_t> seen_per_class(16, 0);
    std::set<uint64_t> patterns;
    for (unsigned c = 0; c <= 15; ++c) {
        const uint64_t count = rrr_vector::binomial(15, c);
        for (uint64_t off = 0; off < count; ++off) {
            const uint64_t p = rrr_vector::decode_block(c, off, 15);
            ASSERT_EQ(static_cast<unsigned>(std::popcount(p)), c);
            ASSERT_LT(p, uint64_t{1} << 15);
            ASSERT_EQ(rrr_vector::encode_block(p, 15), std::make_pair(c, off));
            ASSERT_TRUE(patterns.insert(p).second);
        }
    }
    EXPECT_EQ(patterns.size(), uint64_t{1} << 15);
}

TEST(rrr, decode_rejects_bad_offset)
{
    EXPECT_THROW(rrr_vector::decode_block(1, 15, 15), std::out_of_range);
    EXPECT_THROW(rrr_vector::decode_block(0, 1, 15), std::out_of_range);
    EXPECT_THROW(rrr_vector::decode_block(16, 0, 15), std::out_of_range);
}

TEST(rrr, wide_blocks_round_trip)
{
    std::mt19937_64 rng(4);
    for (unsigned t : {31u, 63u}) {
        for (int k = 0; k < 20000; ++k) {
            uint64_t b = rng() & bits::lo_mask(t);
            if (k % 3 == 0) b &= rng() & rng();
            auto [c, off] = rrr_vector::encode_block(b, t);
            ASSERT_EQ(static_cast<unsigned>(std::popcount(b)), c);
            ASSERT_LT(off, rrr_vector::binomial(t, c));
            ASSERT_EQ(rrr_vector::decode_block(c, off, t), b);
        }
    }
}

TEST(rrr, offset_widths_are_exact)
{
    for (unsigned t : {15u, 31u, 63u}) {
        for (unsigned c = 0; c <= t; ++c) {
            const uint64_t count = rrr_vector::binomial(t, c);
            unsigned w = 0;
            while (w < 64 && (uint64_t{1} << w) < count) ++w;
            EXPECT_EQ(rrr_vector::offset_width(t, c), w) << "t=" << t << " c=" << c;
        }
    }
}

TEST(rrr, unsupported_block_size_rejected)
{
    bit_vector bv(10);
    EXPECT_THROW(rrr_vector(bv, 16), std::invalid_argument);
    EXPECT_THROW(rrr_vector(bv, 0), std::invalid_argument);
}

TEST(rrr, random_sparse_matches_plain)
{
    const uint64_t n = 100000;
    bit_vector raw = random_bits(n, 0.05, 11);
    plain_bv<> plain(raw);
    std::mt19937_64 rng(12);
    for (unsigned t : {15u, 31u, 63u}) {
        rrr_vector rrr(raw, t);
        ASSERT_EQ(rrr.ones(), plain.ones());
        for (int k = 0; k < 10000; ++k) {
            const uint64_t i = rng() % (n + 1);
            ASSERT_EQ(rrr.rank(i), plain.rank(i)) << i;
            if (i < n) ASSERT_EQ(rrr[i], plain[i]);
            const uint64_t j = 1 + rng() % plain.ones();
            ASSERT_EQ(rrr.select(j), plain.select(j)) << j;
            const uint64_t j0 = 1 + rng() % (n - plain.ones());
            ASSERT_EQ(rrr.select0(j0), plain.select0(j0)) << j0;
        }
    }
}

TEST(rrr, compresses_sparse_input)
{
    for (double density : {0.01, 0.05, 0.10}) {
        bit_vector raw = random_bits(200000, density, 21);
        rrr_vector rrr(raw);
        EXPECT_LE(8 * to_bytes(rrr).size(), raw.size()) << density;
    }
}

TEST(rrr, serialization_round_trip_keeps_block_size)
{
    bit_vector raw = random_bits(5000, 0.3, 2);
    rrr_vector rrr(raw, 31);
    auto bytes = to_bytes(rrr);
    auto back = from_bytes<rrr_vector>(bytes);
    EXPECT_EQ(back.block_size(), 31u);
    for (uint64_t i = 0; i <= raw.size(); ++i) ASSERT_EQ(back.rank(i), rrr.rank(i));
    EXPECT_EQ(to_bytes(back), bytes);
}

TEST(sd, hand_encoded_example)
{
    std::vector<uint64_t> pos{2, 5, 12};
    sd_vector sd(pos, 16);
    EXPECT_EQ(sd.low_width(), 2u);
    ASSERT_EQ(sd.low().size(), 3u);
    EXPECT_EQ(sd.low()[0], 2u);
    EXPECT_EQ(sd.low()[1], 1u);
    EXPECT_EQ(sd.low()[2], 0u);
    EXPECT_EQ(sd.high().bits().to_string(), "1010010");
    EXPECT_EQ(sd.select(2), 5u);
    for (uint64_t i = 0; i <= 16; ++i) {
        uint64_t expect = 0;
        for (auto p : pos) expect += p < i;
        EXPECT_EQ(sd.rank(i), expect);
    }
}

TEST(sd, empty_set)
{
    sd_vector sd(std::vector<uint64_t>{}, 10);
    for (uint64_t i = 0; i <= 10; ++i) EXPECT_EQ(sd.rank(i), 0u);
    EXPECT_THROW(sd.select(1), std::out_of_range);
}

TEST(sd, rejects_unsorted_or_duplicate)
{
    EXPECT_THROW(sd_vector(std::vector<uint64_t>{3, 2}, 10), std::invalid_argument);
    EXPECT_THROW(sd_vector(std::vector<uint64_t>{3, 3}, 10), std::invalid_argument);
    EXPECT_THROW(sd_vector(std::vector<uint64_t>{10}, 10), std::invalid_argument);
}

TEST(sd, random_sparse_matches_binary_search)
{
    const uint64_t n = 10000000;
    std::mt19937_64 rng(77);
    std::set<uint64_t> s;
    while (s.size() < 10000) s.insert(rng() % n);
    std::vector<uint64_t> pos(s.begin(), s.end());
    sd_vector sd(pos, n);
    for (uint64_t j = 1; j <= pos.size(); ++j) ASSERT_EQ(sd.select(j), pos[j - 1]);
    for (int k = 0; k < 20000; ++k) {
        const uint64_t i = rng() % (n + 1);
        const uint64_t expect = std::lower_bound(pos.begin(), pos.end(), i) - pos.begin();
        ASSERT_EQ(sd.rank(i), expect) << i;
    }
    for (auto p : pos) {
        ASSERT_EQ(sd.rank(p), sd.rank(p + 1) - 1);
        ASSERT_TRUE(sd[p]);
    }
    // high part bound and size bound
    const uint64_t m = pos.size();
    const unsigned w = sd.low_width();
    EXPECT_EQ(sd.high().ones(), m);
    EXPECT_LE(sd.high().size(), m + (n >> w) + 1);
    const double bits_used = 8.0 * to_bytes(sd).size();
    EXPECT_LE(bits_used, m * (2.0 + std::ceil(std::log2(double(n) / m))) * 1.25 + 1024);
}

TEST(sd, dense_input_falls_back_to_width_one)
{
    bit_vector raw = random_bits(1000, 0.8, 3);
    sd_vector sd(raw);
    EXPECT_EQ(sd.low_width(), 1u);
    auto pos = one_positions(raw);
    for (uint64_t j = 1; j <= pos.size(); ++j) ASSERT_EQ(sd.select(j), pos[j - 1]);
}

TEST(sd, serialization_round_trip)
{
    bit_vector raw = random_bits(30000, 0.02, 5);
    sd_vector sd(raw);
    auto bytes = to_bytes(sd);
    auto back = from_bytes<sd_vector>(bytes);
    for (uint64_t i = 0; i <= raw.size(); i += 3) ASSERT_EQ(back.rank(i), sd.rank(i));
    EXPECT_EQ(to_bytes(back), bytes);
}

namespace {

void check_same(const bit_vector& raw)
{
    plain_bv<> plain(raw);
    rrr_vector rrr(raw);
    sd_vector sd(raw);
    const uint64_t n = raw.size();
    for (uint64_t i = 0; i <= n; ++i) {
        const uint64_t r = plain.rank(i);
        ASSERT_EQ(rrr.rank(i), r);
        ASSERT_EQ(sd.rank(i), r);
        if (i < n) {
            ASSERT_EQ(rrr[i], plain[i]);
            ASSERT_EQ(sd[i], plain[i]);
        }
    }
    for (uint64_t j = 1; j <= plain.ones(); ++j) {
        const uint64_t p = plain.select(j);
        ASSERT_EQ(rrr.select(j), p);
        ASSERT_EQ(sd.select(j), p);
    }
}

}  // namespace

TEST(substitutability, exhaustive_up_to_16_bits)
{
    for (unsigned n = 0; n <= 16; ++n) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            bit_vector raw(n);
            for (unsigned i = 0; i < n; ++i)
                if ((mask >> i) & 1) raw.set(i);
            check_same(raw);
            if (HasFatalFailure()) return;
        }
    }
}

TEST(substitutability, random_up_to_one_million)
{
    for (auto [n, d] : {std::pair{1000ull, 0.5}, std::pair{65537ull, 0.02}, std::pair{1000000ull, 0.1}}) {
        bit_vector raw = random_bits(n, d, n);
        check_same(raw);
        if (HasFatalFailure()) return;
    }
}
