#include "cds/tooling.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cds {

std::string escape_pattern(std::string_view raw)
{
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(raw.size());
    for (unsigned char ch : raw) {
        switch (ch) {
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (ch < 0x20 || ch >= 0x7F) {
                    out += "\\x";
                    out.push_back(hex[ch >> 4]);
                    out.push_back(hex[ch & 15]);
                } else {
                    out.push_back(static_cast<char>(ch));
                }
        }
    }
    return out;
}

std::string unescape_pattern(std::string_view line)
{
    const auto hex_value = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit in escape of pattern '" + std::string(line) + "'");
    };
    std::string out;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] != '\\') {
            out.push_back(line[i]);
            continue;
        }
        if (++i == line.size()) throw std::invalid_argument("dangling backslash in pattern '" + std::string(line) + "'");
        switch (line[i]) {
            case '\\': out.push_back('\\'); break;
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            case 'r': out.push_back('\r'); break;
            case 'x':
                if (i + 2 >= line.size())
                    throw std::invalid_argument("short \\x escape in pattern '" + std::string(line) + "'");
                out.push_back(static_cast<char>(hex_value(line[i + 1]) * 16 + hex_value(line[i + 2])));
                i += 2;
                break;
            default: throw std::invalid_argument("unknown escape in pattern '" + std::string(line) + "'");
        }
    }
    return out;
}

std::vector<std::string> read_pattern_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open pattern file " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(unescape_pattern(line));
    }
    return out;
}

void write_pattern_file(const std::string& path, const std::vector<std::string>& patterns)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create pattern file " + path);
    for (const auto& p : patterns) out << escape_pattern(p) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path);
}

// ---- pattern_codec ----

pattern_codec pattern_codec::bytes() { return pattern_codec{}; }

pattern_codec pattern_codec::words(std::vector<std::string> vocabulary)
{
    pattern_codec c;
    c.mode_ = alphabet_mode::word;
    c.vocab_ = std::move(vocabulary);
    for (uint64_t i = 0; i < c.vocab_.size(); ++i) c.ids_.emplace(c.vocab_[i], i + first_regular_symbol);
    return c;
}

pattern_codec pattern_codec::from_vocabulary_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open vocabulary file " + path);
    std::vector<std::string> vocab;
    std::string line;
    for (uint64_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto tab = line.rfind('\t');
        uint64_t id = 0;
        if (tab == std::string::npos ||
            std::from_chars(line.data() + tab + 1, line.data() + line.size(), id).ec != std::errc{} ||
            id < first_regular_symbol)
            throw format_error(path + ":" + std::to_string(lineno) + ": expected token<TAB>id");
        if (vocab.size() < id - first_regular_symbol + 1) vocab.resize(id - first_regular_symbol + 1);
        vocab[id - first_regular_symbol] = line.substr(0, tab);
    }
    return words(std::move(vocab));
}

pattern_codec pattern_codec::for_collection(const collection& c)
{
    return c.mode() == alphabet_mode::byte ? bytes() : words(c.vocabulary());
}

bool pattern_codec::encode(std::string_view pattern, std::vector<uint64_t>& out) const
{
    out.clear();
    if (mode_ == alphabet_mode::byte) {
        for (unsigned char ch : pattern) {
            if (ch < first_regular_symbol) return false;
            out.push_back(ch);
        }
        return true;
    }
    std::istringstream in{std::string(pattern)};
    std::string tok;
    while (in >> tok) {
        auto it = ids_.find(tok);
        if (it == ids_.end()) return false;
        out.push_back(it->second);
    }
    return true;
}

std::string pattern_codec::decode(const std::vector<uint64_t>& symbols) const
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

// ---- patterns ----

std::vector<std::vector<uint64_t>> gen_patterns(const collection& c, uint64_t len, uint64_t count, uint64_t seed)
{
    if (len == 0) throw std::invalid_argument("pattern length must be at least 1");
    // starts[d]: number of valid start positions in documents before d
    std::vector<uint64_t> starts{0};
    for (uint64_t d = 0; d < c.doc_count(); ++d) {
        const uint64_t l = c.doc_length(d);
        starts.push_back(starts.back() + (l >= len ? l - len + 1 : 0));
    }
    std::vector<std::vector<uint64_t>> out;
    if (starts.back() == 0) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> pick(0, starts.back() - 1);
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        const uint64_t g = pick(rng);
        const uint64_t d = static_cast<uint64_t>(std::upper_bound(starts.begin(), starts.end(), g) - starts.begin()) - 1;
        const uint64_t off = g - starts[d];
        std::vector<uint64_t> p(len);
        for (uint64_t k = 0; k < len; ++k) p[k] = c.symbol(d, off + k);
        out.push_back(std::move(p));
    }
    return out;
}

// ---- bench ----

bench_result run_bench(const document_index& idx, const pattern_codec& codec, const std::vector<std::string>& patterns,
                       uint64_t k, double cutoff_ms, ranking r)
{
    using clock = std::chrono::steady_clock;
    struct acc {
        uint64_t count = 0;
        double total_us = 0, max_us = 0;
    };
    std::map<uint64_t, acc> by_length;
    bench_result res;
    res.hits.resize(patterns.size());
    std::vector<uint64_t> sym;
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (!codec.encode(patterns[i], sym) || sym.empty()) {
            res.errors.push_back("line " + std::to_string(i + 1) + ": pattern '" + escape_pattern(patterns[i]) +
                                 "' is empty or uses symbols outside the index alphabet");
            continue;
        }
        const auto t0 = clock::now();
        res.hits[i] = idx.topk(sym, k, r);
        const double us = std::chrono::duration<double, std::micro>(clock::now() - t0).count();
        acc& a = by_length[sym.size()];
        ++a.count;
        a.total_us += us;
        a.max_us = std::max(a.max_us, us);
    }
    for (const auto& [len, a] : by_length)
        res.rows.push_back({len, a.count, a.total_us / static_cast<double>(a.count), a.max_us, a.max_us >= cutoff_ms * 1000.0});
    return res;
}

std::string format_double(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, end) : std::to_string(v);
}

std::string bench_tsv(const bench_result& b)
{
    std::string out = "pattern_length\tcount\tavg_us\tmax_us\tomitted_flag\n";
    char buf[64];
    for (const auto& row : b.rows) {
        out += std::to_string(row.pattern_length) + '\t' + std::to_string(row.count) + '\t';
        std::snprintf(buf, sizeof buf, "%.3f\t%.3f\t", row.avg_us, row.max_us);
        out += buf;
        out += row.omitted ? "1\n" : "0\n";
    }
    return out;
}

std::string result_tsv_lines(std::string_view escaped_pattern, const std::vector<hit>& hits)
{
    std::string out;
    for (size_t i = 0; i < hits.size(); ++i) {
        out += escaped_pattern;
        out += '\t' + std::to_string(i + 1) + '\t' + std::to_string(hits[i].doc) + '\t' + std::to_string(hits[i].tf) +
               '\t' + format_double(hits[i].score) + '\n';
    }
    return out;
}

}  // namespace cds
