#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cds/collection.hpp"
#include "cds/docindex.hpp"
#include "cds/io.hpp"

namespace cds {

/// One pattern per line: backslash, newline, tab, carriage return and
/// non-printable bytes are escaped as \\ \n \t \r \xHH.
std::string escape_pattern(std::string_view raw);
/// Throws std::invalid_argument on a malformed escape.
std::string unescape_pattern(std::string_view line);

std::vector<std::string> read_pattern_file(const std::string& path);
void write_pattern_file(const std::string& path, const std::vector<std::string>& patterns);

/// Maps patterns in input form to index symbols and back.
class pattern_codec {
public:
    static pattern_codec bytes();
    /// vocabulary[i] is the token with id i + 2.
    static pattern_codec words(std::vector<std::string> vocabulary);
    /// Reads "token\tid" lines as written by collection::write_vocabulary.
    static pattern_codec from_vocabulary_file(const std::string& path);
    static pattern_codec for_collection(const collection& c);

    alphabet_mode mode() const { return mode_; }
    /// False when some byte or token can never occur in an indexed text.
    bool encode(std::string_view pattern, std::vector<uint64_t>& out) const;
    std::string decode(const std::vector<uint64_t>& symbols) const;

private:
    alphabet_mode mode_ = alphabet_mode::byte;
    std::vector<std::string> vocab_;
    std::unordered_map<std::string, uint64_t> ids_;
};

/// count patterns of length len drawn uniformly from the substrings that lie
/// inside one document. Returns nothing when no document is long enough.
std::vector<std::vector<uint64_t>> gen_patterns(const collection& c, uint64_t len, uint64_t count, uint64_t seed);

struct bench_row {
    uint64_t pattern_length = 0;
    uint64_t count = 0;
    double avg_us = 0;
    double max_us = 0;
    bool omitted = false;
};

struct bench_result {
    std::vector<bench_row> rows;  // ascending pattern length
    std::vector<std::string> errors;  // one per pattern line that cannot be encoded
    std::vector<std::vector<hit>> hits;  // per input line, empty for errors
};

/// Times topk for every pattern. A length is marked omitted when one of its
/// queries takes at least cutoff_ms milliseconds.
bench_result run_bench(const document_index& idx, const pattern_codec& codec, const std::vector<std::string>& patterns,
                       uint64_t k, double cutoff_ms = 5000, ranking r = ranking::frequency);
/// Header plus one line per row: pattern_length, count, avg_us, max_us, omitted_flag.
std::string bench_tsv(const bench_result& b);

/// Lines "pattern\trank\tdoc_id\ttf\tscore" for one query (rank from 1).
std::string result_tsv_lines(std::string_view escaped_pattern, const std::vector<hit>& hits);
inline constexpr std::string_view result_tsv_header = "pattern\trank\tdoc_id\ttf\tscore\n";

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// Size breakdown of obj as it would be serialized.
template <class T>
size_tree size_report(const T& obj, std::string root_name = "root")
{
    writer w(nullptr, std::move(root_name));
    obj.serialize(w);
    return w.finish();
}

}  // namespace cds
