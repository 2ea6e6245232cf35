#pragma once

#include <cstdint>
#include <string>

#include "cds/collection.hpp"
#include "cds/int_vector.hpp"

namespace cds {

/// Inclusive suffix-array interval [sp, sp + len - 1]; len == 0 means no match.
struct sa_range {
    uint64_t sp = 0;
    uint64_t len = 0;
    uint64_t ep() const { return sp + len - 1; }
    bool empty() const { return len == 0; }
    bool operator==(const sa_range& o) const { return len == o.len && (len == 0 || sp == o.sp); }
};

//! Maps text symbols to dense codes and stores the symbol prefix counts.
/*!
 * Byte mode keeps a 256-entry symbol-to-code table and compacts to the
 * symbols that occur, so the count table has at most 257 entries. Word mode
 * uses symbols as codes directly and keeps a count table of sigma + 1
 * entries, sigma being the text alphabet size.
 */
class alphabet {
public:
    static constexpr std::string_view magic = "CDS.ALPH";

    alphabet() = default;
    alphabet(const int_vector& text, alphabet_mode mode, uint64_t text_sigma);

    alphabet_mode mode() const { return mode_; }
    uint64_t size() const { return n_; }
    /// Number of codes.
    uint64_t sigma() const { return sigma_; }
    /// Code of a text symbol; false if the symbol never occurs.
    bool to_code(uint64_t symbol, uint64_t& code) const
    {
        if (mode_ == alphabet_mode::byte) {
            if (symbol >= 256 || !present_[symbol]) return false;
            code = char2comp_[symbol];
            return true;
        }
        if (symbol >= sigma_ || count(symbol) == 0) return false;
        code = symbol;
        return true;
    }
    uint64_t to_symbol(uint64_t code) const { return mode_ == alphabet_mode::byte ? comp2char_[code] : code; }
    /// Number of text positions whose code is < c, for c in [0, sigma].
    uint64_t C(uint64_t c) const { return C_[c]; }
    uint64_t count(uint64_t c) const { return C_[c + 1] - C_[c]; }
    /// Code of the first symbol of the i-th smallest suffix.
    uint64_t code_at_rank(uint64_t i) const;

    void serialize(writer& w) const;
    void load(reader& r);

private:
    alphabet_mode mode_ = alphabet_mode::byte;
    uint64_t n_ = 0;
    uint64_t sigma_ = 0;
    int_vector C_{1, 0, 1};
    int_vector char2comp_;  // byte mode only
    int_vector comp2char_;
    bit_vector present_;
};

}  // namespace cds
