#include "cds/collection.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cds {

std::string_view to_string(alphabet_mode m) { return m == alphabet_mode::byte ? "byte" : "word"; }

alphabet_mode parse_alphabet_mode(std::string_view s)
{
    if (s == "byte") return alphabet_mode::byte;
    if (s == "word") return alphabet_mode::word;
    throw std::invalid_argument("unknown alphabet mode '" + std::string(s) + "'");
}

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f'; }

std::vector<std::string_view> tokenize(std::string_view s)
{
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        size_t j = i;
        while (j < s.size() && !is_space(s[j])) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_docs(std::string_view data, char sep)
{
    std::vector<std::string_view> docs;
    size_t start = 0;
    for (size_t i = 0; i < data.size(); ++i) {
        if (data[i] == sep) {
            docs.push_back(data.substr(start, i - start));
            start = i + 1;
        }
    }
    if (start < data.size()) docs.push_back(data.substr(start));
    return docs;
}

}  // namespace

collection collection::from_docs(const std::vector<std::string>& docs, alphabet_mode mode)
{
    collection c;
    c.mode_ = mode;
    if (mode == alphabet_mode::byte) {
        uint64_t total = 0;
        for (const auto& d : docs) total += d.size();
        c.symbols_ = int_vector(total, 0, 8);
        c.starts_.assign(1, 0);
        uint64_t pos = 0, max_sym = 1;
        for (uint64_t k = 0; k < docs.size(); ++k) {
            for (unsigned char ch : docs[k]) {
                if (ch < first_regular_symbol)
                    throw std::invalid_argument("document " + std::to_string(k) + " contains reserved byte 0x0" +
                                                std::to_string(ch));
                c.symbols_.set(pos++, ch);
                max_sym = std::max<uint64_t>(max_sym, ch);
            }
            c.starts_.push_back(pos);
        }
        c.sigma_ = max_sym + 1;
        return c;
    }
    std::vector<std::vector<std::string_view>> toks(docs.size());
    std::vector<std::string_view> all;
    uint64_t total = 0;
    for (size_t k = 0; k < docs.size(); ++k) {
        toks[k] = tokenize(docs[k]);
        total += toks[k].size();
        all.insert(all.end(), toks[k].begin(), toks[k].end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    c.vocab_.assign(all.begin(), all.end());
    c.sigma_ = c.vocab_.size() + first_regular_symbol;
    c.symbols_ = int_vector(total, 0, bits::width_for(c.sigma_ - 1));
    c.starts_.assign(1, 0);
    uint64_t pos = 0;
    for (const auto& dt : toks) {
        for (auto t : dt) {
            const uint64_t id = std::lower_bound(all.begin(), all.end(), t) - all.begin() + first_regular_symbol;
            c.symbols_.set(pos++, id);
        }
        c.starts_.push_back(pos);
    }
    return c;
}

collection collection::parse(std::string_view data, alphabet_mode mode, char sep)
{
    auto views = split_docs(data, sep);
    std::vector<std::string> docs(views.begin(), views.end());
    return from_docs(docs, mode);
}

collection collection::from_file(const std::string& path, alphabet_mode mode, char sep)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), mode, sep);
}

collection collection::from_symbols(const std::vector<std::vector<uint64_t>>& docs, uint64_t sigma)
{
    collection c;
    c.mode_ = alphabet_mode::word;
    c.sigma_ = std::max<uint64_t>(sigma, first_regular_symbol);
    uint64_t total = 0;
    for (const auto& d : docs) total += d.size();
    c.symbols_ = int_vector(total, 0, bits::width_for(c.sigma_ - 1));
    c.starts_.assign(1, 0);
    uint64_t pos = 0;
    for (const auto& d : docs) {
        for (uint64_t s : d) {
            if (s < first_regular_symbol || s >= c.sigma_)
                throw std::invalid_argument("symbol " + std::to_string(s) + " outside [2, sigma)");
            c.symbols_.set(pos++, s);
        }
        c.starts_.push_back(pos);
    }
    for (uint64_t s = first_regular_symbol; s < c.sigma_; ++s) c.vocab_.push_back("s" + std::to_string(s));
    return c;
}

std::vector<uint64_t> collection::doc(uint64_t d) const
{
    std::vector<uint64_t> v(doc_length(d));
    for (uint64_t p = 0; p < v.size(); ++p) v[p] = symbol(d, p);
    return v;
}

bool collection::encode_pattern(std::string_view pattern, std::vector<uint64_t>& out) const
{
    out.clear();
    if (mode_ == alphabet_mode::byte) {
        for (unsigned char ch : pattern) {
            if (ch < first_regular_symbol || ch >= sigma_) return false;
            out.push_back(ch);
        }
        return true;
    }
    for (auto t : tokenize(pattern)) {
        auto it = std::lower_bound(vocab_.begin(), vocab_.end(), t);
        if (it == vocab_.end() || *it != t) return false;
        out.push_back(static_cast<uint64_t>(it - vocab_.begin()) + first_regular_symbol);
    }
    return true;
}

std::string collection::decode_pattern(const std::vector<uint64_t>& symbols) const
{
    std::string s;
    for (size_t k = 0; k < symbols.size(); ++k) {
        if (mode_ == alphabet_mode::byte) {
            s.push_back(static_cast<char>(symbols[k]));
        } else {
            if (k) s.push_back(' ');
            s += vocab_.at(symbols[k] - first_regular_symbol);
        }
    }
    return s;
}

void collection::write_vocabulary(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (size_t k = 0; k < vocab_.size(); ++k) out << vocab_[k] << '\t' << (k + first_regular_symbol) << '\n';
}

concat_text concat_collection(const collection& c)
{
    const uint64_t N = c.doc_count();
    if (N == 0) throw std::invalid_argument("collection has no documents");
    concat_text t;
    t.docs = N;
    t.sigma = c.sigma();
    const uint64_t n = c.total_length() + N + 1;
    t.text = int_vector(n, 0, bits::width_for(t.sigma - 1));
    bit_vector border(n);
    t.doc_start.reserve(N + 1);
    uint64_t pos = 0;
    for (uint64_t d = 0; d < N; ++d) {
        t.doc_start.push_back(pos);
        const uint64_t len = c.doc_length(d);
        for (uint64_t p = 0; p < len; ++p) t.text.set(pos++, c.symbol(d, p));
        border.set(pos);
        t.text.set(pos++, separator_symbol);
    }
    t.doc_start.push_back(pos);
    t.text.set(pos, terminator_symbol);
    t.border = plain_bv<true>(std::move(border));
    return t;
}

}  // namespace cds
