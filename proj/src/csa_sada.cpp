#include "cds/csa_sada.hpp"

#include <stdexcept>

#include "cds/construct.hpp"

namespace cds {

csa_sada::csa_sada(const int_vector& text, alphabet_mode mode, uint64_t text_sigma, sample_order kind, uint64_t rate)
    : alpha_(text, mode, text_sigma)
{
    int_vector sa = suffix_array(text);
    const uint64_t n = text.size();
    int_vector isa(n, 0, sa.width());
    for (uint64_t i = 0; i < n; ++i) isa.set(sa[i], i);
    int_vector psi(n, 0, sa.width());
    for (uint64_t i = 0; i < n; ++i) psi.set(i, isa[sa[i] + 1 == n ? 0 : sa[i] + 1]);
    isa = int_vector();
    init_psi(psi);
    int_vector_cursor cur(sa);
    samples_ = sa_sampling(cur, n, kind, rate);
}

void csa_sada::init_psi(const int_vector& psi)
{
    const uint64_t n = alpha_.size();
    if (psi.size() != n) throw std::invalid_argument("psi length does not match alphabet counts");
    sd_vector::builder b(alpha_.sigma() * n, n);
    uint64_t c = 0;
    for (uint64_t i = 0; i < n; ++i) {
        while (alpha_.C(c + 1) <= i) ++c;
        b.push(c * n + psi[i]);
    }
    psi_ = b.finish();
}

sa_range csa_sada::backward_search(std::span<const uint64_t> pattern) const
{
    const uint64_t n = size();
    sa_range r{0, n};
    for (size_t k = pattern.size(); k-- > 0 && !r.empty();) {
        uint64_t c;
        if (!alpha_.to_code(pattern[k], c)) return {};
        if (k + 1 == pattern.size()) {
            r = {alpha_.C(c), alpha_.count(c)};
            continue;
        }
        const uint64_t lo = psi_.rank(c * n + r.sp);
        const uint64_t hi = psi_.rank(c * n + r.sp + r.len);
        r = {lo, hi - lo};
    }
    if (r.empty()) return {};
    return r;
}

uint64_t csa_sada::sa(uint64_t i) const
{
    const uint64_t n = size();
    if (i >= n) throw std::out_of_range("sa index " + std::to_string(i) + " >= " + std::to_string(n));
    uint64_t v, k = 0;
    while (!samples_.sa_sample(i, v)) {
        i = psi(i);
        ++k;
    }
    return (v + n - k % n) % n;
}

uint64_t csa_sada::isa_unchecked(uint64_t p) const
{
    const uint64_t s = samples_.rate();
    uint64_t i = samples_.isa_sample(p / s);
    for (uint64_t t = p % s; t > 0; --t) i = psi(i);
    return i;
}

uint64_t csa_sada::isa(uint64_t p) const
{
    if (p >= size()) throw std::out_of_range("isa position " + std::to_string(p) + " >= " + std::to_string(size()));
    return isa_unchecked(p);
}

std::vector<uint64_t> csa_sada::extract(uint64_t l, uint64_t r) const
{
    if (l > r || r >= size()) throw std::out_of_range("extract range outside text");
    const uint64_t n = size();
    std::vector<uint64_t> out;
    out.reserve(r - l + 1);
    uint64_t i = isa_unchecked(l);
    for (uint64_t p = l; p <= r; ++p) {
        const uint64_t v = psi_.select_unchecked(i + 1);
        out.push_back(alpha_.to_symbol(v / n));
        i = v % n;
    }
    return out;
}

void csa_sada::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(alpha_.mode()), size());
    write_child(w, "alphabet", alpha_);
    write_child(w, "psi", psi_);
    write_child(w, "samples", samples_);
}

void csa_sada::load(reader& r)
{
    frame_header h = read_header(r, magic);
    alpha_.load(r);
    psi_.load(r);
    samples_.load(r);
    if (alpha_.size() != h.len || samples_.size() != h.len || psi_.ones() != h.len)
        throw format_error("csa_sada component sizes disagree");
}

}  // namespace cds
