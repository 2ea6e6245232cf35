#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cds/corpus_synth.hpp"
#include "cds/docindex.hpp"
#include "cds/memory_monitor.hpp"
#include "cds/tooling.hpp"

using namespace cds;

namespace {

/// A single character, or a decimal / 0x-prefixed byte value.
char parse_separator(const std::string& s)
{
    if (s.size() == 1) return s[0];
    if (s == "\\n") return '\n';
    if (s == "\\t") return '\t';
    size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || v > 255) throw CLI::ValidationError("--sep", "expected one character or a byte value, got '" + s + "'");
    return static_cast<char>(v);
}

void write_text(const std::string& path, const std::string& data)
{
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create " + path);
    out << data;
    if (!out) throw std::runtime_error("write failed for " + path);
}

pattern_codec codec_for(const document_index& idx, const std::string& index_path, const std::string& vocab_path)
{
    if (idx.mode() == alphabet_mode::byte) return pattern_codec::bytes();
    return pattern_codec::from_vocabulary_file(vocab_path.empty() ? index_path + ".vocab" : vocab_path);
}

struct build_args {
    std::string algo = "sada", mode = "byte", input, out, sep = "0x0A", monitor, temp_dir;
    uint64_t sa_sample = 0;
    bool keep_temp = false;
};

int run_build(const build_args& a)
{
    const alphabet_mode mode = parse_alphabet_mode(a.mode);
    const index_algo algo = parse_index_algo(a.algo);
    const collection c = collection::from_file(a.input, mode, parse_separator(a.sep));
    build_options o;
    o.sa_rate = a.sa_sample;
    o.keep_temp = a.keep_temp;
    o.temp_dir = a.temp_dir;
    std::vector<std::string> temps;
    if (!a.monitor.empty()) memory_monitor::start();
    auto idx = build_index(c, algo, o, &temps);
    if (!a.monitor.empty()) write_text(a.monitor, memory_monitor::stop().to_json() + "\n");
    const size_tree t = save_index_file(*idx, a.out);
    if (mode == alphabet_mode::word) c.write_vocabulary(a.out + ".vocab");
    std::cerr << to_string(algo) << " index: " << c.doc_count() << " documents, n = " << idx->size() << ", "
              << t.total() << " bytes -> " << a.out << "\n";
    if (a.keep_temp)
        for (const auto& f : temps) std::cerr << "kept " << f << "\n";
    return 0;
}

struct query_args {
    std::string index, patterns, out, ranking = "freq", vocab;
    uint64_t k = 10;
};

int run_query(const query_args& a)
{
    auto idx = load_index_file(a.index);
    const pattern_codec codec = codec_for(*idx, a.index, a.vocab);
    const ranking r = parse_ranking(a.ranking);
    const auto patterns = read_pattern_file(a.patterns);
    std::string out(result_tsv_header);
    std::vector<uint64_t> sym;
    int bad = 0;
    for (size_t i = 0; i < patterns.size(); ++i) {
        const std::string esc = escape_pattern(patterns[i]);
        if (!codec.encode(patterns[i], sym) || sym.empty()) {
            std::cerr << a.patterns << ":" << (i + 1) << ": pattern '" << esc
                      << "' is empty or uses symbols outside the index alphabet\n";
            ++bad;
            continue;
        }
        out += result_tsv_lines(esc, idx->topk(sym, a.k, r));
    }
    write_text(a.out, out);
    return bad ? 3 : 0;
}

struct gen_patterns_args {
    std::string input, mode = "byte", sep = "0x0A", out;
    uint64_t len = 1, count = 200, seed = 1;
};

int run_gen_patterns(const gen_patterns_args& a)
{
    const collection c = collection::from_file(a.input, parse_alphabet_mode(a.mode), parse_separator(a.sep));
    const pattern_codec codec = pattern_codec::for_collection(c);
    std::vector<std::string> lines;
    for (const auto& p : gen_patterns(c, a.len, a.count, a.seed)) lines.push_back(codec.decode(p));
    if (lines.empty()) std::cerr << "warning: no document has " << a.len << " symbols; pattern file is empty\n";
    std::string data;
    for (const auto& l : lines) data += escape_pattern(l) + "\n";
    write_text(a.out, data);
    return 0;
}

struct size_report_args {
    std::string index, json, html;
};

int run_size_report(const size_report_args& a)
{
    auto idx = load_index_file(a.index);
    const size_tree t = size_report(*idx, std::string(to_string(idx->algo())));
    write_text(a.json, t.to_json(2) + "\n");
    if (!a.html.empty()) write_text(a.html, t.to_html(a.index));
    return 0;
}

struct bench_args {
    std::string index, patterns, out, ranking = "freq", vocab, hits;
    uint64_t k = 10;
    double cutoff_ms = 5000;
};

int run_bench_cmd(const bench_args& a)
{
    auto idx = load_index_file(a.index);
    const pattern_codec codec = codec_for(*idx, a.index, a.vocab);
    const auto patterns = read_pattern_file(a.patterns);
    const bench_result b = run_bench(*idx, codec, patterns, a.k, a.cutoff_ms, parse_ranking(a.ranking));
    for (const auto& e : b.errors) std::cerr << a.patterns << ": " << e << "\n";
    write_text(a.out, bench_tsv(b));
    if (!a.hits.empty()) {
        std::string out(result_tsv_header);
        for (size_t i = 0; i < patterns.size(); ++i) out += result_tsv_lines(escape_pattern(patterns[i]), b.hits[i]);
        write_text(a.hits, out);
    }
    return 0;
}

struct corpus_args {
    corpus_spec spec;
    std::string mode = "byte", sep = "0x0A", out;
};

int run_gen_corpus(corpus_args a)
{
    a.spec.mode = parse_alphabet_mode(a.mode);
    a.spec.separator = parse_separator(a.sep);
    write_text(a.out, gen_corpus(a.spec));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Succinct top-k document retrieval indexes"};
    app.require_subcommand(1);

    build_args ba;
    auto* build = app.add_subcommand("build", "Build a SADA, GREEDY or SORT index from a collection file");
    build->add_option("--algo", ba.algo, "sada, greedy or sort")->check(CLI::IsMember({"sada", "greedy", "sort"}, CLI::ignore_case));
    build->add_option("--mode", ba.mode, "byte or word")->check(CLI::IsMember({"byte", "word"}));
    build->add_option("--input", ba.input, "Collection file")->required()->check(CLI::ExistingFile);
    build->add_option("--out", ba.out, "Index file")->required();
    build->add_option("--sep", ba.sep, "Document separator (character or byte value)")->capture_default_str();
    build->add_option("--sa-sample", ba.sa_sample, "SA sampling rate (default 32 for sada, 2^20 otherwise)");
    build->add_flag("--keep-temp", ba.keep_temp, "Keep the SA and BWT files");
    build->add_option("--temp-dir", ba.temp_dir, "Directory for intermediate files");
    build->add_option("--monitor", ba.monitor, "Write the memory log with construction phases as JSON");

    query_args qa;
    auto* query = app.add_subcommand("query", "Answer top-k queries for a pattern file");
    query->add_option("--index", qa.index)->required()->check(CLI::ExistingFile);
    query->add_option("--patterns", qa.patterns)->required()->check(CLI::ExistingFile);
    query->add_option("-k", qa.k, "Number of documents per pattern")->check(CLI::PositiveNumber);
    query->add_option("--ranking", qa.ranking, "freq or tfidf")->check(CLI::IsMember({"freq", "frequency", "tfidf"}));
    query->add_option("--out", qa.out, "Results TSV (default stdout)");
    query->add_option("--vocab", qa.vocab, "Vocabulary of a word index (default <index>.vocab)");

    gen_patterns_args ga;
    auto* genp = app.add_subcommand("gen-patterns", "Sample patterns that occur in a collection");
    genp->add_option("--input", ga.input)->required()->check(CLI::ExistingFile);
    genp->add_option("--len", ga.len)->required()->check(CLI::PositiveNumber);
    genp->add_option("--count", ga.count, "Patterns to emit");
    genp->add_option("--seed", ga.seed);
    genp->add_option("--mode", ga.mode)->check(CLI::IsMember({"byte", "word"}));
    genp->add_option("--sep", ga.sep);
    genp->add_option("--out", ga.out, "Pattern file (default stdout)");

    size_report_args sa;
    auto* sizer = app.add_subcommand("size-report", "Size breakdown of an index as JSON and HTML");
    sizer->add_option("--index", sa.index)->required()->check(CLI::ExistingFile);
    sizer->add_option("--json", sa.json)->required();
    sizer->add_option("--html", sa.html, "Self-contained sunburst page");

    bench_args be;
    auto* bench = app.add_subcommand("bench", "Time top-k queries per pattern length");
    bench->add_option("--index", be.index)->required()->check(CLI::ExistingFile);
    bench->add_option("--patterns", be.patterns)->required()->check(CLI::ExistingFile);
    bench->add_option("-k", be.k)->check(CLI::PositiveNumber);
    bench->add_option("--cutoff-ms", be.cutoff_ms, "Omit a length when one query takes this long");
    bench->add_option("--ranking", be.ranking)->check(CLI::IsMember({"freq", "frequency", "tfidf"}));
    bench->add_option("--out", be.out, "Timing TSV (default stdout)");
    bench->add_option("--hits", be.hits, "Also write the hit lists as results TSV");
    bench->add_option("--vocab", be.vocab);

    corpus_args ca;
    auto* genc = app.add_subcommand("gen-corpus", "Write a synthetic Zipf collection");
    genc->add_option("--docs", ca.spec.docs)->check(CLI::PositiveNumber);
    genc->add_option("--avg-len", ca.spec.avg_length)->check(CLI::PositiveNumber);
    genc->add_option("--sigma", ca.spec.sigma)->check(CLI::PositiveNumber);
    genc->add_option("--zipf", ca.spec.zipf);
    genc->add_option("--seed", ca.spec.seed);
    genc->add_option("--mode", ca.mode)->check(CLI::IsMember({"byte", "word"}));
    genc->add_option("--sep", ca.sep);
    genc->add_option("--fixture", ca.spec.fixed_docs, "Emit these documents instead of random ones");
    genc->add_option("--out", ca.out, "Collection file (default stdout)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*build) return run_build(ba);
        if (*query) return run_query(qa);
        if (*genp) return run_gen_patterns(ga);
        if (*sizer) return run_size_report(sa);
        if (*bench) return run_bench_cmd(be);
        if (*genc) return run_gen_corpus(ca);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
