#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cds/collection.hpp"

namespace cds {

struct corpus_spec {
    uint64_t docs = 100;
    uint64_t avg_length = 100;  // symbols (bytes or tokens) per document
    uint64_t sigma = 4;
    double zipf = 1.0;          // symbol of rank r has weight 1 / (r + 1)^zipf
    uint64_t seed = 1;
    alphabet_mode mode = alphabet_mode::byte;
    char separator = '\n';
    /// When non-empty, emitted verbatim instead of random documents.
    std::vector<std::string> fixed_docs;
};

/// Symbols of rank 0..sigma-1 in byte mode: letters, digits, then the
/// remaining bytes, never 0x00, 0x01 or the separator. Throws
/// std::invalid_argument when sigma is 0 or exceeds the available bytes.
std::vector<unsigned char> corpus_byte_alphabet(uint64_t sigma, char separator);
/// Token of rank r in word mode.
std::string corpus_token(uint64_t rank);

/// Collection file contents: documents joined by the separator (byte mode)
/// or lines of space separated tokens (word mode). Document lengths are
/// geometric with the requested mean and at least 1.
std::string gen_corpus(const corpus_spec& spec);
void write_corpus(const corpus_spec& spec, const std::string& path);

}  // namespace cds
