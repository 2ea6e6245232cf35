#include "cds/alphabet.hpp"

#include <stdexcept>

namespace cds {

alphabet::alphabet(const int_vector& text, alphabet_mode mode, uint64_t text_sigma) : mode_(mode), n_(text.size())
{
    if (mode == alphabet_mode::byte && text_sigma > 256) throw std::invalid_argument("byte alphabet with symbols >= 256");
    tracked_vector<uint64_t> freq(text_sigma, 0);
    for (uint64_t i = 0; i < n_; ++i) {
        const uint64_t s = text[i];
        if (s >= text_sigma) throw std::invalid_argument("text symbol " + std::to_string(s) + " >= sigma");
        ++freq[s];
    }
    if (mode == alphabet_mode::byte) {
        char2comp_ = int_vector(256, 0, 8);
        present_ = bit_vector(256);
        uint64_t codes = 0;
        for (uint64_t s = 0; s < text_sigma; ++s)
            if (freq[s]) {
                present_.set(s);
                char2comp_.set(s, codes++);
            }
        sigma_ = codes;
        comp2char_ = int_vector(sigma_, 0, 8);
        C_ = int_vector(sigma_ + 1, 0, bits::width_for(n_));
        uint64_t acc = 0;
        for (uint64_t s = 0, c = 0; s < text_sigma; ++s)
            if (freq[s]) {
                comp2char_.set(c, s);
                C_.set(c++, acc);
                acc += freq[s];
            }
        C_.set(sigma_, acc);
        return;
    }
    sigma_ = text_sigma;
    C_ = int_vector(sigma_ + 1, 0, bits::width_for(n_));
    uint64_t acc = 0;
    for (uint64_t s = 0; s < sigma_; ++s) {
        C_.set(s, acc);
        acc += freq[s];
    }
    C_.set(sigma_, acc);
}

uint64_t alphabet::code_at_rank(uint64_t i) const
{
    // largest c with C[c] <= i
    uint64_t lo = 0, hi = sigma_;
    while (hi - lo > 1) {
        const uint64_t mid = (lo + hi) / 2;
        if (C_[mid] <= i) lo = mid;
        else hi = mid;
    }
    return lo;
}

void alphabet::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(mode_), n_);
    w.put_u64(sigma_);
    write_child(w, "C", C_);
    if (mode_ == alphabet_mode::byte) {
        write_child(w, "char2comp", char2comp_);
        write_child(w, "comp2char", comp2char_);
        write_child(w, "present", present_);
    }
}

void alphabet::load(reader& r)
{
    frame_header h = read_header(r, magic);
    if (h.param > 1) throw format_error("unknown alphabet mode tag");
    mode_ = static_cast<alphabet_mode>(h.param);
    n_ = h.len;
    sigma_ = r.get_u64();
    C_.load(r);
    if (C_.size() != sigma_ + 1) throw format_error("alphabet count table size mismatch");
    if (mode_ == alphabet_mode::byte) {
        char2comp_.load(r);
        comp2char_.load(r);
        present_.load(r);
    }
}

}  // namespace cds
