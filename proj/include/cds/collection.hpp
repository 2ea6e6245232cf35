#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"

namespace cds {

enum class alphabet_mode : uint8_t { byte = 0, word = 1 };

std::string_view to_string(alphabet_mode m);
/// Throws std::invalid_argument for anything but "byte" or "word".
alphabet_mode parse_alphabet_mode(std::string_view s);

inline constexpr uint64_t terminator_symbol = 0;  // $
inline constexpr uint64_t separator_symbol = 1;   // #
inline constexpr uint64_t first_regular_symbol = 2;

//! Documents as symbol sequences. Regular symbols are >= 2.
/*!
 * Byte mode keeps byte values as symbols (0x00 and 0x01 are rejected).
 * Word mode splits documents on whitespace and numbers the distinct tokens
 * from 2 in lexicographic order.
 */
class collection {
public:
    collection() = default;

    /// Documents are separated by sep; a trailing separator does not open a new document.
    static collection parse(std::string_view data, alphabet_mode mode, char sep = '\n');
    static collection from_file(const std::string& path, alphabet_mode mode, char sep = '\n');
    static collection from_docs(const std::vector<std::string>& docs, alphabet_mode mode);
    /// Documents given directly as symbol sequences over [2, sigma).
    static collection from_symbols(const std::vector<std::vector<uint64_t>>& docs, uint64_t sigma);

    alphabet_mode mode() const { return mode_; }
    uint64_t doc_count() const { return starts_.size() - 1; }
    uint64_t doc_length(uint64_t d) const { return starts_[d + 1] - starts_[d]; }
    uint64_t symbol(uint64_t d, uint64_t p) const { return symbols_[starts_[d] + p]; }
    std::vector<uint64_t> doc(uint64_t d) const;
    uint64_t total_length() const { return symbols_.size(); }
    /// One more than the largest symbol that may occur (at least 2).
    uint64_t sigma() const { return sigma_; }
    const std::vector<std::string>& vocabulary() const { return vocab_; }

    /// Maps a pattern in the collection's input form to symbols. Returns false
    /// when some token or byte can never occur in the text.
    bool encode_pattern(std::string_view pattern, std::vector<uint64_t>& out) const;
    std::string decode_pattern(const std::vector<uint64_t>& symbols) const;
    /// Writes "token\tid" lines.
    void write_vocabulary(const std::string& path) const;

private:
    alphabet_mode mode_ = alphabet_mode::byte;
    int_vector symbols_{0, 0, 8};
    std::vector<uint64_t> starts_{0};
    uint64_t sigma_ = 2;
    std::vector<std::string> vocab_;  // word mode: vocab_[id - 2]
};

/// T = d_0 # d_1 # ... d_{N-1} # $ and the border bitvector marking each #.
struct concat_text {
    int_vector text;
    uint64_t sigma = 2;
    plain_bv<true> border;
    std::vector<uint64_t> doc_start;  // N + 1 entries; doc_start[N] = n - 1
    uint64_t docs = 0;
    uint64_t size() const { return text.size(); }
};

/// Throws std::invalid_argument for an empty collection.
concat_text concat_collection(const collection& c);

}  // namespace cds
