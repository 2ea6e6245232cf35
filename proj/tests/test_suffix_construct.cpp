#include <gtest/gtest.h>

#include <random>

#include "cds/collection.hpp"
#include "cds/construct.hpp"
#include "cds/wt_int.hpp"
#include "oracles.hpp"

using namespace cds;

namespace {

std::vector<uint64_t> to_std(const int_vector& v)
{
    std::vector<uint64_t> out(v.size());
    for (uint64_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

int_vector from_std(const std::vector<uint64_t>& v)
{
    uint64_t mx = 0;
    for (auto x : v) mx = std::max(mx, x);
    return int_vector::from_values(v, bits::width_for(mx));
}

std::string temp_path(const std::string& name) { return testing::TempDir() + "/" + name; }

collection random_collection(uint64_t docs, uint64_t avg_len, uint64_t sigma, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<uint64_t>> d(docs);
    for (auto& doc : d) {
        const uint64_t len = rng() % (2 * avg_len + 1);
        for (uint64_t k = 0; k < len; ++k) doc.push_back(2 + rng() % (sigma - 2));
    }
    return collection::from_symbols(d, sigma);
}

// Document of a text position by scanning document boundaries.
uint64_t naive_doc_of(const concat_text& t, uint64_t pos)
{
    uint64_t d = 0;
    while (d < t.docs && pos >= t.doc_start[d + 1]) ++d;
    return d;
}

}  // namespace

TEST(collection, running_example_concat)
{
    auto c = collection::from_docs({"aba", "ab"}, alphabet_mode::byte);
    auto t = concat_collection(c);
    std::vector<uint64_t> expect{'a', 'b', 'a', 1, 'a', 'b', 1, 0};
    EXPECT_EQ(to_std(t.text), expect);
    EXPECT_EQ(t.border.bits().to_string(), "00010010");
    EXPECT_EQ(t.docs, 2u);
    EXPECT_EQ(t.border.rank(6), 1u);
}

TEST(collection, single_empty_document)
{
    auto c = collection::parse("\n", alphabet_mode::byte);
    ASSERT_EQ(c.doc_count(), 1u);
    auto t = concat_collection(c);
    EXPECT_EQ(to_std(t.text), (std::vector<uint64_t>{1, 0}));
    EXPECT_EQ(t.border.bits().to_string(), "10");
}

TEST(collection, errors)
{
    EXPECT_THROW(concat_collection(collection::parse("", alphabet_mode::byte)), std::invalid_argument);
    EXPECT_THROW(collection::parse(std::string("a\x01" "b", 3), alphabet_mode::byte), std::invalid_argument);
    EXPECT_THROW(collection::parse(std::string("a\0b", 3), alphabet_mode::byte), std::invalid_argument);
}

TEST(collection, word_mode_vocabulary)
{
    auto c = collection::parse("a b\nb", alphabet_mode::word);
    ASSERT_EQ(c.doc_count(), 2u);
    ASSERT_EQ(c.vocabulary().size(), 2u);
    EXPECT_EQ(c.vocabulary()[0], "a");
    EXPECT_EQ(c.vocabulary()[1], "b");
    EXPECT_EQ(c.sigma(), 4u);  // two tokens plus two sentinels
    EXPECT_EQ(c.doc(0), (std::vector<uint64_t>{2, 3}));
    EXPECT_EQ(c.doc(1), (std::vector<uint64_t>{3}));
    std::vector<uint64_t> pat;
    EXPECT_TRUE(c.encode_pattern("b a", pat));
    EXPECT_EQ(pat, (std::vector<uint64_t>{3, 2}));
    EXPECT_FALSE(c.encode_pattern("zzz", pat));
}

TEST(collection, word_ids_follow_lexicographic_order)
{
    auto c = collection::parse("zeta alpha  mid\n\talpha zeta\n", alphabet_mode::word);
    EXPECT_EQ(c.doc_count(), 2u);
    EXPECT_EQ(c.vocabulary(), (std::vector<std::string>{"alpha", "mid", "zeta"}));
    EXPECT_EQ(c.doc(0), (std::vector<uint64_t>{4, 2, 3}));
    EXPECT_EQ(c.decode_pattern({2, 4}), "alpha zeta");
}

TEST(suffix_array, running_example)
{
    auto t = concat_collection(collection::from_docs({"aba", "ab"}, alphabet_mode::byte));
    EXPECT_EQ(to_std(suffix_array(t.text)), (std::vector<uint64_t>{7, 6, 3, 2, 4, 0, 5, 1}));
}

TEST(suffix_array, unary_text_sorts_by_length)
{
    for (uint64_t k : {0ull, 1ull, 5ull, 100ull, 1000ull}) {
        std::vector<uint64_t> t(k, 2);
        t.push_back(0);
        auto sa = to_std(suffix_array(from_std(t)));
        for (uint64_t i = 0; i <= k; ++i) ASSERT_EQ(sa[i], k - i);
    }
}

TEST(suffix_array, rejects_text_without_unique_minimum)
{
    EXPECT_THROW(suffix_array(from_std({2, 0, 3, 0})), std::invalid_argument);
    EXPECT_THROW(suffix_array(from_std({2, 1, 3})), std::invalid_argument);
}

TEST(suffix_array, exhaustive_binary_texts)
{
    for (unsigned n = 0; n <= 12; ++n) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            std::vector<uint64_t> t(n + 1, 0);
            for (unsigned i = 0; i < n; ++i) t[i] = 1 + ((mask >> i) & 1);
            ASSERT_EQ(to_std(suffix_array(from_std(t))), oracle::naive_sa(t)) << "n=" << n << " mask=" << mask;
        }
    }
}

TEST(suffix_array, random_texts_match_naive_sort)
{
    std::mt19937_64 rng(42);
    for (uint64_t sigma : {2ull, 3ull, 4ull, 26ull, 300ull, 5000ull}) {
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<uint64_t> t(2000);
            for (auto& x : t) x = 1 + rng() % sigma;
            if (rep == 1)  // long repeats
                for (size_t i = 500; i < t.size(); ++i) t[i] = t[i % 37];
            t.push_back(0);
            ASSERT_EQ(to_std(suffix_array(from_std(t))), oracle::naive_sa(t)) << sigma;
        }
    }
}

TEST(construction, bwt_psi_and_doc_array_of_running_example)
{
    auto c = collection::from_docs({"aba", "ab"}, alphabet_mode::byte);
    auto t = concat_collection(c);
    const auto sa_path = temp_path("re.sa"), bwt_path = temp_path("re.bwt");
    suffix_array_to_file(t.text, sa_path);
    EXPECT_EQ(to_std(load_int_vector_file(sa_path)), (std::vector<uint64_t>{7, 6, 3, 2, 4, 0, 5, 1}));
    bwt_from_sa_file(t.text, sa_path, bwt_path);
    EXPECT_EQ(to_std(load_int_vector_file(bwt_path)), (std::vector<uint64_t>{1, 'b', 'a', 'b', 1, 0, 'a', 'a'}));
    auto psi = psi_from_bwt_file(bwt_path, symbol_prefix_counts(t.text, t.sigma));
    EXPECT_EQ(to_std(psi), (std::vector<uint64_t>{5, 0, 4, 2, 6, 7, 1, 3}));
    auto D = doc_array_from_sa_file(sa_path, t.border, t.docs);
    EXPECT_EQ(to_std(D), (std::vector<uint64_t>{2, 1, 0, 0, 1, 0, 1, 0}));
    auto [C, Cn] = prev_next_arrays(D, t.docs);
    std::vector<int64_t> c_signed;
    for (uint64_t i = 0; i < C.size(); ++i) c_signed.push_back(static_cast<int64_t>(C[i]) - 1);
    EXPECT_EQ(c_signed, (std::vector<int64_t>{-1, -1, -1, 2, 1, 3, 4, 5}));
    EXPECT_EQ(to_std(Cn), (std::vector<uint64_t>{8, 4, 3, 5, 6, 7, 8, 8}));
}

TEST(construction, small_hand_examples)
{
    // "ab$"
    auto t = from_std({2, 3, 0});
    auto sa = suffix_array(t);
    EXPECT_EQ(to_std(sa), (std::vector<uint64_t>{2, 0, 1}));
    auto path = temp_path("ab.sa"), bpath = temp_path("ab.bwt");
    save_int_vector_file(sa, path);
    bwt_from_sa_file(t, path, bpath);
    EXPECT_EQ(to_std(load_int_vector_file(bpath)), (std::vector<uint64_t>{3, 0, 2}));
    EXPECT_EQ(to_std(psi_from_bwt_file(bpath, symbol_prefix_counts(t, 4))), (std::vector<uint64_t>{1, 2, 0}));
    // single document "a": D holds {0, 1} plus the sentinel value
    auto ct = concat_collection(collection::from_docs({"a"}, alphabet_mode::byte));
    save_int_vector_file(suffix_array(ct.text), path);
    auto D = to_std(doc_array_from_sa_file(path, ct.border, 1));
    EXPECT_EQ(D, (std::vector<uint64_t>{1, 0, 0}));
}

TEST(construction, truncated_sa_file_is_reported)
{
    auto t = concat_collection(random_collection(20, 50, 6, 1));
    auto path = temp_path("trunc.sa");
    suffix_array_to_file(t.text, path);
    std::string bytes;
    {
        std::ifstream in(path, std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(in), {});
    }
    bytes.resize(bytes.size() - 16);
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << bytes;
    }
    EXPECT_THROW(bwt_from_sa_file(t.text, path, temp_path("trunc.bwt")), format_error);
    EXPECT_THROW(doc_array_from_sa_file(path, t.border, t.docs), format_error);
}

TEST(construction, random_collections_match_oracles)
{
    for (uint64_t seed = 0; seed < 12; ++seed) {
        auto c = random_collection(1 + seed * 3, 30, 3 + seed % 5, seed);
        auto t = concat_collection(c);
        auto T = to_std(t.text);
        auto sa_ref = oracle::naive_sa(T);
        const auto sa_path = temp_path("r.sa"), bwt_path = temp_path("r.bwt");
        suffix_array_to_file(t.text, sa_path);
        ASSERT_EQ(to_std(load_int_vector_file(sa_path)), sa_ref);
        bwt_from_sa_file(t.text, sa_path, bwt_path);
        auto bwt = to_std(load_int_vector_file(bwt_path));
        ASSERT_EQ(bwt, oracle::bwt(T, sa_ref));
        auto sorted_bwt = bwt, sorted_t = T;
        std::sort(sorted_bwt.begin(), sorted_bwt.end());
        std::sort(sorted_t.begin(), sorted_t.end());
        ASSERT_EQ(sorted_bwt, sorted_t);
        auto prefix = symbol_prefix_counts(t.text, t.sigma);
        auto psi = to_std(psi_from_bwt_file(bwt_path, prefix));
        ASSERT_EQ(psi, oracle::psi(sa_ref));
        // Psi increasing within each symbol range; LF inverse of Psi
        for (uint64_t s = 0; s < t.sigma; ++s)
            for (uint64_t i = prefix[s] + 1; i < prefix[s + 1]; ++i) ASSERT_LT(psi[i - 1], psi[i]);
        wt_int<> wbwt(bwt, t.sigma);
        for (uint64_t i = 0; i < T.size(); ++i) {
            const uint64_t lf = prefix[bwt[i]] + wbwt.rank(i, bwt[i]);
            ASSERT_EQ(psi[lf], i);
        }
        // Psi cycle from the $ position visits every index
        std::vector<bool> seen(T.size());
        uint64_t i = 0;
        for (uint64_t k = 0; k < T.size(); ++k) {
            ASSERT_FALSE(seen[i]);
            seen[i] = true;
            i = psi[i];
        }
        ASSERT_EQ(i, 0u);
        // D identity and histogram
        auto D = to_std(doc_array_from_sa_file(sa_path, t.border, t.docs));
        std::vector<uint64_t> hist(t.docs + 1, 0);
        for (uint64_t k = 0; k < T.size(); ++k) {
            ASSERT_EQ(D[k], naive_doc_of(t, sa_ref[k]));
            ++hist[D[k]];
        }
        for (uint64_t d = 0; d < t.docs; ++d) ASSERT_EQ(hist[d], c.doc_length(d) + 1);
        ASSERT_EQ(hist[t.docs], 1u);
        // C and C'
        auto [C, Cn] = prev_next_arrays(from_std(D), t.docs);
        for (uint64_t k = 0; k < D.size(); ++k) {
            int64_t prev = -1;
            for (int64_t j = static_cast<int64_t>(k) - 1; j >= 0; --j)
                if (D[j] == D[k]) {
                    prev = j;
                    break;
                }
            uint64_t next = D.size();
            for (uint64_t j = k + 1; j < D.size(); ++j)
                if (D[j] == D[k]) {
                    next = j;
                    break;
                }
            ASSERT_EQ(static_cast<int64_t>(C[k]) - 1, prev);
            ASSERT_EQ(Cn[k], next);
        }
    }
}

TEST(construction, prev_next_of_distinct_values)
{
    std::vector<uint64_t> D{3, 0, 2, 1};
    auto [C, Cn] = prev_next_arrays(from_std(D), 3);
    for (uint64_t i = 0; i < 4; ++i) {
        EXPECT_EQ(C[i], 0u);
        EXPECT_EQ(Cn[i], 4u);
    }
}

TEST(doc_isa, hand_examples)
{
    auto c = collection::from_docs({"aba", "x"}, alphabet_mode::byte);
    auto isa = doc_inverse_suffix_arrays(c);
    EXPECT_EQ(to_std(isa[0]), (std::vector<uint64_t>{2, 3, 1, 0}));
    EXPECT_EQ(isa[0].width(), 2u);
    EXPECT_EQ(to_std(isa[1]), (std::vector<uint64_t>{1, 0}));
}

TEST(doc_isa, random_docs_and_relative_order)
{
    auto c = random_collection(100, 20, 5, 77);
    auto isa = doc_inverse_suffix_arrays(c);
    auto t = concat_collection(c);
    auto T = to_std(t.text);
    auto gisa = oracle::inverse(oracle::naive_sa(T));
    for (uint64_t d = 0; d < c.doc_count(); ++d) {
        auto local = c.doc(d);
        local.push_back(0);
        auto lsa = oracle::naive_sa(local);
        ASSERT_EQ(to_std(isa[d]), oracle::inverse(lsa));
        ASSERT_EQ(isa[d].width(), bits::width_for(c.doc_length(d)));
        const uint64_t off = t.doc_start[d];
        for (uint64_t p = 0; p < c.doc_length(d); ++p)
            for (uint64_t q = p + 1; q < c.doc_length(d); ++q)
                ASSERT_EQ(gisa[off + p] < gisa[off + q], isa[d][p] < isa[d][q]);
    }
}
