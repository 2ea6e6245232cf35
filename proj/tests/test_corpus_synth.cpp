#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "cds/corpus_synth.hpp"

using namespace cds;

TEST(corpus_synth, fixture_mode_reproduces_running_example)
{
    corpus_spec spec;
    spec.docs = 2;
    spec.fixed_docs = {"aba", "ab"};
    EXPECT_EQ(gen_corpus(spec), "aba\nab\n");
    auto c = collection::parse(gen_corpus(spec), alphabet_mode::byte);
    ASSERT_EQ(c.doc_count(), 2u);
    EXPECT_EQ(c.doc_length(0), 3u);
}

TEST(corpus_synth, deterministic_per_seed)
{
    corpus_spec spec;
    spec.docs = 50;
    spec.avg_length = 100;
    spec.sigma = 4;
    spec.seed = 7;
    const std::string a = gen_corpus(spec);
    EXPECT_EQ(gen_corpus(spec), a);
    spec.seed = 8;
    EXPECT_NE(gen_corpus(spec), a);
    spec.seed = 7;
    spec.mode = alphabet_mode::word;
    EXPECT_EQ(gen_corpus(spec), gen_corpus(spec));
}

TEST(corpus_synth, no_reserved_bytes_and_document_count)
{
    corpus_spec spec;
    spec.docs = 300;
    spec.avg_length = 20;
    spec.sigma = 253;
    spec.zipf = 0.3;
    const std::string data = gen_corpus(spec);
    uint64_t seps = 0;
    for (unsigned char ch : data) {
        EXPECT_GE(ch, 2);
        seps += ch == '\n';
    }
    EXPECT_EQ(seps, 300u);
    auto c = collection::parse(data, alphabet_mode::byte);
    EXPECT_EQ(c.doc_count(), 300u);
    for (uint64_t d = 0; d < c.doc_count(); ++d) EXPECT_GE(c.doc_length(d), 1u);
}

TEST(corpus_synth, lengths_are_geometric_around_the_mean)
{
    corpus_spec spec;
    spec.docs = 4000;
    spec.avg_length = 30;
    spec.sigma = 8;
    auto c = collection::parse(gen_corpus(spec), alphabet_mode::byte);
    const double mean = static_cast<double>(c.total_length()) / static_cast<double>(c.doc_count());
    EXPECT_NEAR(mean, 30.0, 1.5);
    uint64_t ones = 0;
    for (uint64_t d = 0; d < c.doc_count(); ++d) ones += c.doc_length(d) == 1;
    // P(len = 1) = 1 / mean for the shifted geometric law
    EXPECT_NEAR(static_cast<double>(ones) / 4000.0, 1.0 / 30.0, 0.012);
}

TEST(corpus_synth, zipf_histogram_passes_chi_square)
{
    corpus_spec spec;
    spec.docs = 1000;
    spec.avg_length = 50;
    spec.sigma = 16;
    spec.zipf = 1.0;
    spec.seed = 11;
    const std::string data = gen_corpus(spec);
    const auto alpha = corpus_byte_alphabet(16, '\n');
    std::map<unsigned char, uint64_t> hist;
    uint64_t total = 0;
    for (unsigned char ch : data)
        if (ch != '\n') ++hist[ch], ++total;
    double norm = 0;
    for (int r = 0; r < 16; ++r) norm += 1.0 / (r + 1);
    double chi2 = 0;
    for (int r = 0; r < 16; ++r) {
        const double expect = static_cast<double>(total) * (1.0 / (r + 1)) / norm;
        const double diff = static_cast<double>(hist[alpha[r]]) - expect;
        chi2 += diff * diff / expect;
    }
    // 15 degrees of freedom: the 0.999 quantile is 37.7
    EXPECT_LT(chi2, 37.7);
}

TEST(corpus_synth, word_mode_tokens)
{
    corpus_spec spec;
    spec.docs = 20;
    spec.avg_length = 10;
    spec.sigma = 1000;
    spec.mode = alphabet_mode::word;
    auto c = collection::parse(gen_corpus(spec), alphabet_mode::word);
    EXPECT_EQ(c.doc_count(), 20u);
    for (const auto& tok : c.vocabulary()) EXPECT_EQ(tok[0], 'w');
}

TEST(corpus_synth, invalid_specs)
{
    corpus_spec spec;
    spec.sigma = 0;
    EXPECT_THROW(gen_corpus(spec), std::invalid_argument);
    spec.sigma = 254;
    EXPECT_THROW(gen_corpus(spec), std::invalid_argument);
    spec.sigma = 4;
    spec.docs = 0;
    EXPECT_THROW(gen_corpus(spec), std::invalid_argument);
    spec.docs = 1;
    spec.avg_length = 0;
    EXPECT_THROW(gen_corpus(spec), std::invalid_argument);
}
