#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"
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

std::vector<bool> as_bools(const bit_vector& bv)
{
    std::vector<bool> b(bv.size());
    for (uint64_t i = 0; i < bv.size(); ++i) b[i] = bv[i];
    return b;
}

}  // namespace

TEST(int_vector, empty_vector)
{
    auto v = int_vector::from_values({}, 7);
    EXPECT_EQ(v.size(), 0u);
    EXPECT_EQ(v.width(), 7u);
}

TEST(int_vector, small_round_trip)
{
    std::vector<uint64_t> vals{5, 0, 3};
    auto v = int_vector::from_values(vals, 3);
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0], 5u);
    EXPECT_EQ(v[1], 0u);
    EXPECT_EQ(v[2], 3u);
}

TEST(int_vector, random_width17_matches_plain_array)
{
    std::mt19937_64 rng(17);
    std::vector<uint64_t> vals(10000);
    for (auto& x : vals) x = rng() & ((1u << 17) - 1);
    auto v = int_vector::from_values(vals, 17);
    for (size_t i = 0; i < vals.size(); ++i) ASSERT_EQ(v[i], vals[i]) << i;
}

TEST(int_vector, every_width_packs_without_interference)
{
    std::mt19937_64 rng(3);
    for (unsigned w = 1; w <= 64; ++w) {
        std::vector<uint64_t> vals(301);
        for (auto& x : vals) x = rng() & bits::lo_mask(w);
        auto v = int_vector::from_values(vals, w);
        // overwrite in reverse order to exercise set() on straddling fields
        for (size_t i = vals.size(); i-- > 0;) {
            vals[i] = rng() & bits::lo_mask(w);
            v.set(i, vals[i]);
        }
        for (size_t i = 0; i < vals.size(); ++i) ASSERT_EQ(v[i], vals[i]) << "w=" << w << " i=" << i;
    }
}

TEST(int_vector, rejects_value_too_wide)
{
    std::vector<uint64_t> vals{1, 8};
    EXPECT_THROW(int_vector::from_values(vals, 3), std::out_of_range);
    EXPECT_THROW(int_vector(4, 0, 0), std::invalid_argument);
    EXPECT_THROW(int_vector(4, 0, 65), std::invalid_argument);
}

TEST(int_vector, serialized_size_is_header_plus_padded_payload)
{
    for (unsigned w : {1u, 7u, 13u, 64u}) {
        for (uint64_t len : {0ull, 1ull, 63ull, 64ull, 100ull, 1000ull}) {
            int_vector v(len, 0, w);
            const uint64_t bytes = to_bytes(v).size();
            EXPECT_EQ(bytes, header_bytes + 8 * ((w * len + 63) / 64));
        }
    }
    // 100 values of width 7: 24 header bytes + ceil(700/64) words
    EXPECT_EQ(to_bytes(int_vector(100, 0, 7)).size(), 24u + 11u * 8u);
}

TEST(int_vector, serialization_round_trip_is_bit_exact)
{
    std::mt19937_64 rng(99);
    std::vector<uint64_t> vals(777);
    for (auto& x : vals) x = rng() % 100000;
    auto v = int_vector::from_values(vals, 17);
    std::string bytes = to_bytes(v);
    auto back = from_bytes<int_vector>(bytes);
    EXPECT_EQ(back, v);
    EXPECT_EQ(to_bytes(back), bytes);
}

TEST(int_vector, truncated_input_is_reported)
{
    std::string bytes = to_bytes(int_vector(100, 3, 9));
    bytes.resize(bytes.size() - 5);
    EXPECT_THROW(from_bytes<int_vector>(bytes), format_error);
    std::string bad = to_bytes(int_vector(2, 0, 9));
    bad[0] = 'X';
    EXPECT_THROW(from_bytes<int_vector>(bad), format_error);
}

TEST(int_vector, bit_compress_narrows_to_largest_value)
{
    std::vector<uint64_t> vals{3, 900, 17};
    auto v = int_vector::from_values(vals, 64);
    v.bit_compress();
    EXPECT_EQ(v.width(), 10u);
    EXPECT_EQ(v[1], 900u);
}

TEST(int_vector, file_streaming_round_trip)
{
    std::mt19937_64 rng(5);
    const std::string path = testing::TempDir() + "/iv_stream.bin";
    std::vector<uint64_t> vals(100003);
    for (auto& x : vals) x = rng() & bits::lo_mask(23);
    {
        int_vector_file_writer w(path, 23);
        for (auto x : vals) w.push(x);
        w.close();
    }
    auto whole = load_int_vector_file(path);
    EXPECT_EQ(whole, int_vector::from_values(vals, 23));
    int_vector_file_reader r(path);
    ASSERT_EQ(r.size(), vals.size());
    for (auto x : vals) ASSERT_EQ(r.next(), x);
}

TEST(int_vector, file_reader_detects_truncation)
{
    const std::string path = testing::TempDir() + "/iv_trunc.bin";
    save_int_vector_file(int_vector(1000, 5, 40), path);
    std::string bytes;
    {
        std::ifstream in(path, std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(in), {});
    }
    bytes.resize(bytes.size() / 2);
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << bytes;
    }
    int_vector_file_reader r(path);
    EXPECT_THROW(
        {
            for (uint64_t i = 0; i < 1000; ++i) r.next();
        },
        format_error);
}

TEST(int_vector, tracked_allocation_is_recorded)
{
    memory_monitor::start();
    {
        int_vector v(10, 0, 64);
    }
    mem_log log = memory_monitor::stop();
    ASSERT_GE(log.events.size(), 1u);
    EXPECT_GE(log.peak_bytes - 0, 80u);
    EXPECT_GE(log.largest_allocation, 80u);
}

TEST(bit_vector, rank_examples)
{
    plain_bv<> bv(bit_vector::from_string("10110"));
    EXPECT_EQ(bv.rank(0), 0u);
    EXPECT_EQ(bv.rank(5), 3u);
    plain_bv<> border(bit_vector::from_string("00010010"));
    EXPECT_EQ(border.rank(6), 1u);
    EXPECT_THROW(bv.rank(6), std::out_of_range);
}

TEST(bit_vector, select_examples)
{
    plain_bv<> bv(bit_vector::from_string("10110"));
    EXPECT_EQ(bv.select(1), 0u);
    EXPECT_EQ(bv.select(3), 3u);
    EXPECT_THROW(bv.select(0), std::out_of_range);
    EXPECT_THROW(bv.select(4), std::out_of_range);
    plain_bv<> ones(bit_vector(100, true));
    for (uint64_t j = 1; j <= 100; ++j) EXPECT_EQ(ones.select(j), j - 1);
}

TEST(bit_vector, exhaustive_small_vectors)
{
    for (unsigned n = 0; n <= 12; ++n) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            bit_vector raw(n);
            std::vector<bool> ref(n);
            for (unsigned i = 0; i < n; ++i)
                if ((mask >> i) & 1) raw.set(i), ref[i] = true;
            plain_bv<> bv(raw);
            plain_bv<false> bv_nosel(raw);
            uint64_t ones = 0;
            for (unsigned i = 0; i <= n; ++i) {
                ASSERT_EQ(bv.rank(i), oracle::rank1(ref, i));
                if (i < n) ones += ref[i];
            }
            ASSERT_EQ(bv.ones(), ones);
            for (uint64_t j = 1; j <= ones; ++j) {
                ASSERT_EQ(static_cast<int64_t>(bv.select(j)), oracle::select_value(ref, j, true));
                ASSERT_EQ(bv_nosel.select(j), bv.select(j));
            }
            for (uint64_t j = 1; j <= n - ones; ++j)
                ASSERT_EQ(static_cast<int64_t>(bv.select0(j)), oracle::select_value(ref, j, false));
        }
    }
}

class bit_vector_random : public ::testing::TestWithParam<std::tuple<uint64_t, double>> {};

TEST_P(bit_vector_random, rank_select_match_naive)
{
    auto [n, density] = GetParam();
    bit_vector raw = random_bits(n, density, n * 31 + static_cast<uint64_t>(density * 1000));
    auto ref = as_bools(raw);
    plain_bv<> bv(raw);
    plain_bv<false> bv_nosel(raw);
    std::vector<uint64_t> prefix(n + 1, 0), ones_pos, zeros_pos;
    for (uint64_t i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i] + ref[i];
        (ref[i] ? ones_pos : zeros_pos).push_back(i);
    }
    for (uint64_t i = 0; i <= n; ++i) ASSERT_EQ(bv.rank(i), prefix[i]) << i;
    for (uint64_t j = 1; j <= ones_pos.size(); ++j) {
        ASSERT_EQ(bv.select(j), ones_pos[j - 1]) << j;
        ASSERT_EQ(bv_nosel.select(j), ones_pos[j - 1]) << j;
    }
    for (uint64_t j = 1; j <= zeros_pos.size(); ++j) ASSERT_EQ(bv.select0(j), zeros_pos[j - 1]) << j;
    // weak inverse
    for (uint64_t p : ones_pos) ASSERT_EQ(bv.select(bv.rank(p) + 1), p);
}

INSTANTIATE_TEST_SUITE_P(sizes, bit_vector_random,
                         ::testing::Values(std::make_tuple(64ull, 0.5), std::make_tuple(2047ull, 0.3),
                                           std::make_tuple(2048ull, 0.9), std::make_tuple(70000ull, 0.5),
                                           std::make_tuple(100000ull, 0.01), std::make_tuple(300001ull, 0.97)));

TEST(bit_vector, rank_overhead_at_one_million_bits)
{
    bit_vector raw = random_bits(1000000, 0.5, 1);
    rank_support_v5 rs(raw);
    std::ostringstream out;
    writer w(&out);
    write_child(w, "rank", rs);
    size_tree t = w.finish();
    const double overhead = 8.0 * t.child("rank")->total() / 1e6;
    EXPECT_LE(overhead, 0.08);
}

TEST(bit_vector, serialization_round_trip)
{
    bit_vector raw = random_bits(50000, 0.2, 8);
    plain_bv<> bv(raw);
    auto bytes = to_bytes(bv);
    auto back = from_bytes<plain_bv<>>(bytes);
    for (uint64_t i = 0; i <= raw.size(); i += 7) ASSERT_EQ(back.rank(i), bv.rank(i));
    for (uint64_t j = 1; j <= bv.ones(); j += 5) ASSERT_EQ(back.select(j), bv.select(j));
    EXPECT_EQ(to_bytes(back), bytes);
}
