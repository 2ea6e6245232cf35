#include "cds/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cds {

namespace {

// Two's-complement values in a fixed-width int_vector.
class signed_array {
public:
    signed_array(uint64_t len, unsigned width) : v_(len, 0, width), w_(width) {}
    int64_t get(uint64_t i) const
    {
        const uint64_t x = v_[i];
        return (x >> (w_ - 1)) ? static_cast<int64_t>(x | ~bits::lo_mask(w_)) : static_cast<int64_t>(x);
    }
    void set(uint64_t i, int64_t x) { v_.set(i, static_cast<uint64_t>(x)); }
    uint64_t size() const { return v_.size(); }

private:
    int_vector v_;
    unsigned w_;
};

// Larsson-Sadakane suffix sorting. I holds suffix numbers grouped by the
// current h-prefix order, with sorted runs collapsed to negative lengths; V
// maps each suffix to its group number (the last index of its group).
class ls_sorter {
public:
    explicit ls_sorter(const int_vector& text)
        : m_(text.size()), I_(m_, bits::width_for(m_) + 1), V_(m_, 0, bits::width_for(m_ == 0 ? 0 : m_ - 1))
    {
    }

    // Returns I holding SA; V is released first.
    signed_array run(const int_vector& text)
    {
        if (m_ == 0) return std::move(I_);
        initial_buckets(text);
        h_ = 1;
        const int64_t m = static_cast<int64_t>(m_);
        while (I_.get(0) > -m) {
            int64_t pi = 0, sl = 0;
            do {
                const int64_t s = I_.get(pi);
                if (s < 0) {
                    pi -= s;
                    sl += s;
                } else {
                    if (sl) {
                        I_.set(pi + sl, sl);
                        sl = 0;
                    }
                    const int64_t pk = static_cast<int64_t>(V_[s]) + 1;
                    sort_split(pi, pk - pi);
                    pi = pk;
                }
            } while (pi < m);
            if (sl) I_.set(pi + sl, sl);
            h_ *= 2;
        }
        for (uint64_t i = 0; i < m_; ++i) I_.set(V_[i], static_cast<int64_t>(i));
        V_ = int_vector();
        return std::move(I_);
    }

private:
    void initial_buckets(const int_vector& text)
    {
        uint64_t sigma = 0;
        for (uint64_t i = 0; i < m_; ++i) sigma = std::max(sigma, text[i] + 1);
        tracked_vector<uint64_t> start;
        if (sigma <= 2 * m_ + 2) {
            start.assign(sigma + 1, 0);
            for (uint64_t i = 0; i < m_; ++i) ++start[text[i] + 1];
            for (uint64_t c = 1; c <= sigma; ++c) start[c] += start[c - 1];
            tracked_vector<uint64_t> fill(start.begin(), start.end() - 1);
            for (uint64_t i = 0; i < m_; ++i) I_.set(fill[text[i]]++, static_cast<int64_t>(i));
            for (uint64_t i = 0; i < m_; ++i) V_.set(i, start[text[i] + 1] - 1);
            for (uint64_t c = 0; c < sigma; ++c)
                if (start[c + 1] - start[c] == 1) I_.set(start[c], -1);
            return;
        }
        // sparse alphabet: comparison sort of positions
        tracked_vector<uint64_t> order(m_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](uint64_t a, uint64_t b) { return text[a] < text[b]; });
        for (uint64_t k = 0; k < m_;) {
            uint64_t e = k;
            while (e + 1 < m_ && text[order[e + 1]] == text[order[k]]) ++e;
            for (uint64_t q = k; q <= e; ++q) {
                I_.set(q, static_cast<int64_t>(order[q]));
                V_.set(order[q], e);
            }
            if (e == k) I_.set(k, -1);
            k = e + 1;
        }
    }

    uint64_t key(int64_t p) const { return V_[static_cast<uint64_t>(I_.get(p)) + h_]; }
    void swap(int64_t a, int64_t b)
    {
        const int64_t t = I_.get(a);
        I_.set(a, I_.get(b));
        I_.set(b, t);
    }

    void update_group(int64_t pl, int64_t pm)
    {
        const uint64_t g = static_cast<uint64_t>(pm);
        V_.set(static_cast<uint64_t>(I_.get(pl)), g);
        if (pl == pm) {
            I_.set(pl, -1);
            return;
        }
        do {
            ++pl;
            V_.set(static_cast<uint64_t>(I_.get(pl)), g);
        } while (pl < pm);
    }

    void select_sort_split(int64_t p, int64_t n)
    {
        int64_t pa = p;
        const int64_t pn = p + n - 1;
        while (pa < pn) {
            int64_t pb = pa + 1;
            uint64_t f = key(pa);
            for (int64_t pi = pa + 1; pi <= pn; ++pi) {
                const uint64_t v = key(pi);
                if (v < f) {
                    f = v;
                    swap(pi, pa);
                    pb = pa + 1;
                } else if (v == f) {
                    swap(pi, pb);
                    ++pb;
                }
            }
            update_group(pa, pb - 1);
            pa = pb;
        }
        if (pa == pn) {
            V_.set(static_cast<uint64_t>(I_.get(pa)), static_cast<uint64_t>(pa));
            I_.set(pa, -1);
        }
    }

    int64_t med3(int64_t a, int64_t b, int64_t c) const
    {
        const uint64_t ka = key(a), kb = key(b), kc = key(c);
        if (ka < kb) return kb < kc ? b : (ka < kc ? c : a);
        return kb > kc ? b : (ka > kc ? c : a);
    }

    uint64_t choose_pivot(int64_t p, int64_t n) const
    {
        int64_t pm = p + (n >> 1);
        if (n > 7) {
            int64_t pl = p, pn = p + n - 1;
            if (n > 40) {
                const int64_t s = n >> 3;
                pl = med3(pl, pl + s, pl + s + s);
                pm = med3(pm - s, pm, pm + s);
                pn = med3(pn - s - s, pn - s, pn);
            }
            pm = med3(pl, pm, pn);
        }
        return key(pm);
    }

    // Ternary split-end partition of I[p, p+n) by key; recursion on the
    // smaller and larger parts, the equal part becomes one group.
    void sort_split(int64_t p, int64_t n)
    {
        if (n < 7) {
            select_sort_split(p, n);
            return;
        }
        const uint64_t v = choose_pivot(p, n);
        int64_t pa = p, pb = p, pc = p + n - 1, pd = p + n - 1;
        for (;;) {
            uint64_t f;
            while (pb <= pc && (f = key(pb)) <= v) {
                if (f == v) {
                    swap(pa, pb);
                    ++pa;
                }
                ++pb;
            }
            while (pc >= pb && (f = key(pc)) >= v) {
                if (f == v) {
                    swap(pc, pd);
                    --pd;
                }
                --pc;
            }
            if (pb > pc) break;
            swap(pb, pc);
            ++pb;
            --pc;
        }
        const int64_t pn = p + n;
        int64_t s = std::min(pa - p, pb - pa);
        for (int64_t pl = p, pm = pb - s; s; --s, ++pl, ++pm) swap(pl, pm);
        s = std::min(pd - pc, pn - pd - 1);
        for (int64_t pl = pb, pm = pn - s; s; --s, ++pl, ++pm) swap(pl, pm);
        s = pb - pa;
        const int64_t t = pd - pc;
        if (s > 0) sort_split(p, s);
        update_group(p + s, p + n - t - 1);
        if (t > 0) sort_split(p + n - t, t);
    }

    uint64_t m_;
    signed_array I_;
    int_vector V_;
    uint64_t h_ = 0;
};

void check_text(const int_vector& text)
{
    const uint64_t n = text.size();
    if (n == 0) return;
    const uint64_t last = text[n - 1];
    for (uint64_t i = 0; i + 1 < n; ++i)
        if (text[i] <= last) throw std::invalid_argument("text must end with a unique smallest symbol");
}

}  // namespace

int_vector suffix_array(const int_vector& text)
{
    check_text(text);
    const uint64_t n = text.size();
    signed_array I = ls_sorter(text).run(text);
    int_vector sa(n, 0, bits::width_for(n == 0 ? 0 : n - 1));
    for (uint64_t i = 0; i < n; ++i) sa.set(i, static_cast<uint64_t>(I.get(i)));
    return sa;
}

void suffix_array_to_file(const int_vector& text, const std::string& path)
{
    check_text(text);
    const uint64_t n = text.size();
    signed_array I = ls_sorter(text).run(text);
    int_vector_file_writer out(path, bits::width_for(n == 0 ? 0 : n - 1));
    for (uint64_t i = 0; i < n; ++i) out.push(static_cast<uint64_t>(I.get(i)));
    out.close();
}

void bwt_from_sa_file(const int_vector& text, const std::string& sa_path, const std::string& bwt_path)
{
    const uint64_t n = text.size();
    int_vector_file_reader sa(sa_path);
    if (sa.size() != n) throw format_error("suffix array length does not match text");
    int_vector_file_writer out(bwt_path, text.width());
    for (uint64_t i = 0; i < n; ++i) {
        const uint64_t p = sa.next();
        out.push(text[p == 0 ? n - 1 : p - 1]);
    }
    out.close();
}

std::vector<uint64_t> symbol_prefix_counts(const int_vector& text, uint64_t sigma)
{
    std::vector<uint64_t> c(sigma + 1, 0);
    for (uint64_t i = 0; i < text.size(); ++i) ++c[text[i] + 1];
    for (uint64_t s = 1; s <= sigma; ++s) c[s] += c[s - 1];
    return c;
}

int_vector psi_from_bwt_file(const std::string& bwt_path, const std::vector<uint64_t>& prefix_counts)
{
    int_vector_file_reader bwt(bwt_path);
    const uint64_t n = bwt.size();
    int_vector psi(n, 0, bits::width_for(n == 0 ? 0 : n - 1));
    tracked_vector<uint64_t> next(prefix_counts.begin(), prefix_counts.end());
    for (uint64_t i = 0; i < n; ++i) {
        const uint64_t c = bwt.next();
        if (c + 1 >= next.size()) throw format_error("BWT symbol outside alphabet");
        psi.set(next[c]++, i);
    }
    return psi;
}

int_vector doc_array_from_sa_file(const std::string& sa_path, const plain_bv<true>& border, uint64_t docs)
{
    int_vector_file_reader sa(sa_path);
    const uint64_t n = sa.size();
    if (n != border.size()) throw format_error("suffix array length does not match border");
    int_vector D(n, 0, bits::width_for(docs));
    for (uint64_t i = 0; i < n; ++i) D.set(i, border.rank(sa.next()));
    return D;
}

int_vector prev_occurrence_array(const int_vector& D, uint64_t docs)
{
    const uint64_t n = D.size();
    int_vector C(n, 0, bits::width_for(n));
    tracked_vector<uint64_t> last(docs + 1, 0);  // 1 + last index seen, 0 for none
    for (uint64_t i = 0; i < n; ++i) {
        const uint64_t d = D[i];
        C.set(i, last[d]);
        last[d] = i + 1;
    }
    return C;
}

int_vector next_occurrence_array(const int_vector& D, uint64_t docs)
{
    const uint64_t n = D.size();
    int_vector Cn(n, 0, bits::width_for(n));
    tracked_vector<uint64_t> next(docs + 1, n);
    for (uint64_t i = n; i-- > 0;) {
        const uint64_t d = D[i];
        Cn.set(i, next[d]);
        next[d] = i;
    }
    return Cn;
}

std::pair<int_vector, int_vector> prev_next_arrays(const int_vector& D, uint64_t docs)
{
    return {prev_occurrence_array(D, docs), next_occurrence_array(D, docs)};
}

int_vector doc_inverse_suffix_array(const collection& c, uint64_t d)
{
    const uint64_t len = c.doc_length(d);
    int_vector local(len + 1, 0, bits::width_for(c.sigma() - 1));
    for (uint64_t p = 0; p < len; ++p) local.set(p, c.symbol(d, p));
    local.set(len, terminator_symbol);
    int_vector sa = suffix_array(local);
    int_vector isa(len + 1, 0, bits::width_for(len));
    for (uint64_t i = 0; i <= len; ++i) isa.set(sa[i], i);
    return isa;
}

std::vector<int_vector> doc_inverse_suffix_arrays(const collection& c)
{
    std::vector<int_vector> out;
    out.reserve(c.doc_count());
    for (uint64_t d = 0; d < c.doc_count(); ++d) out.push_back(doc_inverse_suffix_array(c, d));
    return out;
}

}  // namespace cds
