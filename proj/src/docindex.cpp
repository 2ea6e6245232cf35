#include "cds/docindex.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <queue>
#include <random>

#include "cds/construct.hpp"
#include "cds/memory_monitor.hpp"

namespace cds {

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

/// Owns the intermediate files of one build.
class temp_files_guard {
public:
    temp_files_guard(const build_options& o, std::vector<std::string>* report) : keep_(o.keep_temp), report_(report)
    {
        static std::atomic<uint64_t> counter{0};
        const std::filesystem::path dir = o.temp_dir.empty() ? std::filesystem::temp_directory_path()
                                                             : std::filesystem::path(o.temp_dir);
        std::random_device rd;
        prefix_ = (dir / ("cds-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" +
                          std::to_string(rd() % 1000000)))
                      .string();
    }
    ~temp_files_guard()
    {
        if (keep_) return;
        std::error_code ec;
        for (const auto& p : paths_) std::filesystem::remove(p, ec);
    }
    temp_files_guard(const temp_files_guard&) = delete;
    temp_files_guard& operator=(const temp_files_guard&) = delete;

    std::string path(const std::string& suffix)
    {
        paths_.push_back(prefix_ + suffix);
        if (report_) report_->push_back(paths_.back());
        return paths_.back();
    }

private:
    bool keep_;
    std::vector<std::string>* report_;
    std::string prefix_;
    std::vector<std::string> paths_;
};

struct wt_parts {
    greedy_csa csa;
    int_vector D;
};

/// Shared construction of the BWT wavelet-tree CSA and the document array.
wt_parts build_wt_parts(const collection& c, const concat_text& t, const build_options& o,
                        std::vector<std::string>* temp_files)
{
    temp_files_guard tmp(o, temp_files);
    const std::string sa_path = tmp.path(".sa"), bwt_path = tmp.path(".bwt");
    const uint64_t n = t.size();
    const uint64_t rate = o.sa_rate ? o.sa_rate : std::min<uint64_t>(uint64_t{1} << 20, n);
    wt_parts out;
    {
        memory_monitor::phase p("SA");
        suffix_array_to_file(t.text, sa_path);
    }
    {
        memory_monitor::phase p("BWT");
        bwt_from_sa_file(t.text, sa_path, bwt_path);
    }
    {
        memory_monitor::phase p("CSA");
        const int_vector bwt = load_int_vector_file(bwt_path);
        int_vector_file_reader sa(sa_path);
        out.csa = greedy_csa(alphabet(t.text, c.mode(), t.sigma), bwt, sa, sample_order::text, rate);
    }
    {
        memory_monitor::phase p("D");
        out.D = doc_array_from_sa_file(sa_path, t.border, t.docs);
    }
    return out;
}

void check_sizes(bool ok, const char* what)
{
    if (!ok) throw format_error(std::string(what) + " components disagree with the index header");
}

}  // namespace

std::string_view to_string(index_algo a)
{
    switch (a) {
        case index_algo::sada: return "sada";
        case index_algo::greedy: return "greedy";
        case index_algo::sort: return "sort";
    }
    return "?";
}

index_algo parse_index_algo(std::string_view s)
{
    const std::string l = lower(s);
    if (l == "sada") return index_algo::sada;
    if (l == "greedy") return index_algo::greedy;
    if (l == "sort") return index_algo::sort;
    throw std::invalid_argument("unknown index algorithm '" + std::string(s) + "' (expected sada, greedy or sort)");
}

std::string_view to_string(ranking r) { return r == ranking::tfidf ? "tfidf" : "freq"; }

ranking parse_ranking(std::string_view s)
{
    const std::string l = lower(s);
    if (l == "freq" || l == "frequency") return ranking::frequency;
    if (l == "tfidf") return ranking::tfidf;
    throw std::invalid_argument("unknown ranking '" + std::string(s) + "' (expected freq or tfidf)");
}

double tfidf_score(uint64_t tf, uint64_t docs, uint64_t df)
{
    if (df == docs) return 0.0;
    return static_cast<double>(tf) * std::log(static_cast<double>(docs) / static_cast<double>(df));
}

std::vector<hit> rank_hits(std::vector<hit> all, uint64_t k, ranking r, uint64_t docs, uint64_t df)
{
    for (auto& h : all) h.score = r == ranking::tfidf ? tfidf_score(h.tf, docs, df) : static_cast<double>(h.tf);
    const auto before = [](const hit& a, const hit& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.tf != b.tf) return a.tf > b.tf;
        return a.doc < b.doc;
    };
    const uint64_t keep = std::min<uint64_t>(k, all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(), before);
    all.resize(keep);
    return all;
}

// ---- scratch_pool ----

scratch_pool::lease::~lease()
{
    if (!bv_) return;
    for (uint64_t d : marked_) bv_->set(d, false);
    std::lock_guard lock(pool_->mu_);
    if (bv_->size() == pool_->bits_) pool_->free_.push_back(std::move(bv_));
}

bool scratch_pool::lease::mark(uint64_t i)
{
    if ((*bv_)[i]) return false;
    bv_->set(i);
    marked_.push_back(i);
    return true;
}

scratch_pool::lease scratch_pool::acquire()
{
    std::unique_ptr<bit_vector> bv;
    {
        std::lock_guard lock(mu_);
        if (!free_.empty()) {
            bv = std::move(free_.back());
            free_.pop_back();
        }
    }
    if (!bv) bv = std::make_unique<bit_vector>(bits_);
    return lease(*this, std::move(bv));
}

uint64_t scratch_pool::idle() const
{
    std::lock_guard lock(mu_);
    return free_.size();
}

void scratch_pool::reset(uint64_t bits)
{
    std::lock_guard lock(mu_);
    bits_ = bits;
    free_.clear();
}

// ---- document_index ----

bool document_index::usable(std::span<const uint64_t> pattern)
{
    if (pattern.empty()) return false;
    return std::all_of(pattern.begin(), pattern.end(), [](uint64_t s) { return s >= first_regular_symbol; });
}

void document_index::check_k(uint64_t k)
{
    if (k == 0) throw std::invalid_argument("top-k requires k >= 1");
}

void document_index::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(algo()), n_);
    w.put_u8(static_cast<uint8_t>(mode_));
    w.put_u64(docs_);
    serialize_components(w);
}

std::unique_ptr<document_index> document_index::load(reader& r)
{
    frame_header h = read_header(r, magic);
    std::unique_ptr<document_index> idx;
    switch (h.param) {
        case 0: idx = std::make_unique<sada_index>(); break;
        case 1: idx = std::make_unique<greedy_index>(); break;
        case 2: idx = std::make_unique<sort_index>(); break;
        default: throw format_error("unknown index algorithm tag " + std::to_string(h.param));
    }
    const uint8_t mode = r.get_u8();
    if (mode > 1) throw format_error("unknown alphabet mode tag " + std::to_string(mode));
    idx->mode_ = static_cast<alphabet_mode>(mode);
    idx->docs_ = r.get_u64();
    idx->n_ = h.len;
    idx->load_components(r);
    return idx;
}

std::unique_ptr<document_index> build_index(const collection& c, index_algo algo, const build_options& options,
                                            std::vector<std::string>* temp_files)
{
    switch (algo) {
        case index_algo::sada: return std::make_unique<sada_index>(c, options, temp_files);
        case index_algo::greedy: return std::make_unique<greedy_index>(c, options, temp_files);
        case index_algo::sort: return std::make_unique<sort_index>(c, options, temp_files);
    }
    throw std::invalid_argument("unknown index algorithm");
}

std::unique_ptr<document_index> load_index_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open index file " + path);
    reader r(in);
    return document_index::load(r);
}

size_tree save_index_file(const document_index& idx, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create index file " + path);
    writer w(&out, "index");
    idx.serialize(w);
    size_tree t = w.finish();
    out.close();
    if (!out) throw std::runtime_error("write failed for " + path);
    return t;
}

// ---- sada_index ----

sada_index::sada_index(const collection& c, const build_options& o, std::vector<std::string>* temp_files)
    : pool_(0)
{
    concat_text t = concat_collection(c);
    mode_ = c.mode();
    docs_ = t.docs;
    n_ = t.size();
    const uint64_t rate = o.sa_rate ? o.sa_rate : 32;
    temp_files_guard tmp(o, temp_files);
    const std::string sa_path = tmp.path(".sa"), bwt_path = tmp.path(".bwt");
    {
        memory_monitor::phase p("SA");
        suffix_array_to_file(t.text, sa_path);
    }
    {
        memory_monitor::phase p("BWT");
        bwt_from_sa_file(t.text, sa_path, bwt_path);
    }
    {
        memory_monitor::phase p("Psi");
        const int_vector psi = psi_from_bwt_file(bwt_path, symbol_prefix_counts(t.text, t.sigma));
        int_vector_file_reader sa(sa_path);
        csa_ = csa_sada(alphabet(t.text, c.mode(), t.sigma), psi, sa, sample_order::text, rate);
    }
    {
        memory_monitor::phase p("doc_isa");
        doc_isa_ = doc_inverse_suffix_arrays(c);
    }
    int_vector D;
    {
        memory_monitor::phase p("D");
        D = doc_array_from_sa_file(sa_path, t.border, t.docs);
    }
    {
        memory_monitor::phase p("rminq");
        const int_vector C = prev_occurrence_array(D, t.docs);
        rminq_ = rmq_sct(C, rmq_kind::min);
    }
    {
        memory_monitor::phase p("rmaxq");
        const int_vector Cn = next_occurrence_array(D, t.docs);
        rmaxq_ = rmq_sct(Cn, rmq_kind::max);
    }
    border_ = std::move(t.border);
    pool_.reset(docs_);
}

sa_range sada_index::match(std::span<const uint64_t> pattern) const
{
    if (!usable(pattern)) return {};
    return csa_.backward_search(pattern);
}

// Left-first traversal over rminq yields each document at its leftmost
// position; right-first over rmaxq yields its rightmost one. A subinterval
// whose extreme belongs to an already listed document holds no new document.
template <bool Rightmost, class Visit>
void sada_index::list(uint64_t sp, uint64_t ep, Visit&& visit) const
{
    if (sp == 0 || sp > ep || ep >= n_) throw std::out_of_range("document listing interval outside [1, n)");
    auto seen = pool_.acquire();
    std::vector<std::pair<uint64_t, uint64_t>> todo{{sp, ep}};
    while (!todo.empty()) {
        const auto [s, e] = todo.back();
        todo.pop_back();
        const uint64_t x = Rightmost ? rmaxq_(s, e) : rminq_(s, e);
        const uint64_t p = csa_.sa(x);
        const uint64_t d = border_.rank(p);
        if (!seen.mark(d)) continue;
        if (!visit(d, x, p)) return;
        const bool has_left = x > s, has_right = x < e;
        if (Rightmost) {
            if (has_left) todo.emplace_back(s, x - 1);
            if (has_right) todo.emplace_back(x + 1, e);
        } else {
            if (has_right) todo.emplace_back(x + 1, e);
            if (has_left) todo.emplace_back(s, x - 1);
        }
    }
}

std::vector<sada_index::occurrence> sada_index::distinct_docs(uint64_t sp, uint64_t ep) const
{
    std::vector<occurrence> out;
    list<false>(sp, ep, [&](uint64_t d, uint64_t x, uint64_t) {
        out.push_back({d, x});
        return true;
    });
    return out;
}

std::vector<sada_index::occurrence> sada_index::distinct_docs_rightmost(uint64_t sp, uint64_t ep) const
{
    std::vector<occurrence> out;
    list<true>(sp, ep, [&](uint64_t d, uint64_t x, uint64_t) {
        out.push_back({d, x});
        return true;
    });
    return out;
}

uint64_t sada_index::tf(uint64_t doc, uint64_t l, uint64_t sp, uint64_t ep) const
{
    uint64_t right_pos = 0;
    bool found = false;
    list<true>(sp, ep, [&](uint64_t d, uint64_t, uint64_t p) {
        if (d != doc) return true;
        right_pos = p;
        found = true;
        return false;
    });
    if (!found) throw std::invalid_argument("document does not occur in the interval");
    return local_rank(doc, right_pos) - local_rank(doc, csa_.sa(l)) + 1;
}

std::vector<hit> sada_index::topk(std::span<const uint64_t> pattern, uint64_t k, ranking r) const
{
    check_k(k);
    const sa_range m = match(pattern);
    if (m.empty()) return {};
    std::vector<std::pair<uint64_t, uint64_t>> left, right;  // (doc, text position)
    list<false>(m.sp, m.ep(), [&](uint64_t d, uint64_t, uint64_t p) {
        left.emplace_back(d, p);
        return true;
    });
    list<true>(m.sp, m.ep(), [&](uint64_t d, uint64_t, uint64_t p) {
        right.emplace_back(d, p);
        return true;
    });
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::vector<hit> all;
    all.reserve(left.size());
    for (size_t i = 0; i < left.size(); ++i) {
        const uint64_t d = left[i].first;
        all.push_back({d, local_rank(d, right[i].second) - local_rank(d, left[i].second) + 1, 0.0});
    }
    const uint64_t df = all.size();
    return rank_hits(std::move(all), k, r, docs_, df);
}

uint64_t sada_index::df(std::span<const uint64_t> pattern) const
{
    const sa_range m = match(pattern);
    if (m.empty()) return 0;
    uint64_t count = 0;
    list<false>(m.sp, m.ep(), [&](uint64_t, uint64_t, uint64_t) {
        ++count;
        return true;
    });
    return count;
}

void sada_index::serialize_components(writer& w) const
{
    write_child(w, "csa_full", csa_);
    write_child(w, "border", border_);
    write_child(w, "rminq", rminq_);
    write_child(w, "rmaxq", rmaxq_);
    writer::scope s(w, "doc_isa");
    w.put_u64(doc_isa_.size());
    for (const auto& v : doc_isa_) v.serialize(w);
}

void sada_index::load_components(reader& r)
{
    csa_.load(r);
    border_.load(r);
    rminq_.load(r);
    rmaxq_.load(r);
    const uint64_t count = r.get_u64();
    check_sizes(csa_.size() == n_ && border_.size() == n_ && border_.ones() == docs_ && rminq_.size() == n_ &&
                    rmaxq_.size() == n_ && count == docs_,
                "SADA");
    doc_isa_.assign(count, int_vector());
    for (auto& v : doc_isa_) v.load(r);
    pool_.reset(docs_);
}

// ---- greedy_index ----

greedy_index::greedy_index(const collection& c, const build_options& o, std::vector<std::string>* temp_files)
{
    const concat_text t = concat_collection(c);
    mode_ = c.mode();
    docs_ = t.docs;
    n_ = t.size();
    wt_parts parts = build_wt_parts(c, t, o, temp_files);
    csa_ = std::move(parts.csa);
    memory_monitor::phase p("wtd");
    wtd_ = wt_int<plain_bv<false>>(parts.D, docs_ + 1);
}

sa_range greedy_index::match(std::span<const uint64_t> pattern) const
{
    if (!usable(pattern)) return {};
    return csa_.backward_search(pattern);
}

std::vector<hit> greedy_index::greedy(const sa_range& r, uint64_t k) const
{
    // larger interval first; equal sizes by smaller (order-preserving) node id
    const auto lower_priority = [](const wt_node& a, const wt_node& b) {
        return a.len != b.len ? a.len < b.len : a.id > b.id;
    };
    std::priority_queue<wt_node, std::vector<wt_node>, decltype(lower_priority)> pq(lower_priority);
    pq.push(wtd_.root(r.sp, r.ep()));
    std::vector<hit> out;
    while (!pq.empty() && out.size() < k) {
        const wt_node v = pq.top();
        pq.pop();
        if (wtd_.is_leaf(v)) {
            out.push_back({v.a, v.len, 0.0});
            continue;
        }
        const auto [left, right] = wtd_.expand(v);
        if (!left.empty()) pq.push(left);
        if (!right.empty()) pq.push(right);
    }
    return out;
}

std::vector<hit> greedy_index::topk(std::span<const uint64_t> pattern, uint64_t k, ranking r) const
{
    check_k(k);
    const sa_range m = match(pattern);
    if (m.empty()) return {};
    const uint64_t df = r == ranking::tfidf ? greedy(m, docs_).size() : 0;
    return rank_hits(greedy(m, k), k, r, docs_, df);
}

uint64_t greedy_index::df(std::span<const uint64_t> pattern) const
{
    const sa_range m = match(pattern);
    if (m.empty()) return 0;
    return greedy(m, docs_).size();
}

void greedy_index::serialize_components(writer& w) const
{
    write_child(w, "csa_full", csa_);
    write_child(w, "wtd", wtd_);
}

void greedy_index::load_components(reader& r)
{
    csa_.load(r);
    wtd_.load(r);
    check_sizes(csa_.size() == n_ && wtd_.size() == n_ && wtd_.sigma() == docs_ + 1, "GREEDY");
}

// ---- sort_index ----

sort_index::sort_index(const collection& c, const build_options& o, std::vector<std::string>* temp_files)
{
    const concat_text t = concat_collection(c);
    mode_ = c.mode();
    docs_ = t.docs;
    n_ = t.size();
    wt_parts parts = build_wt_parts(c, t, o, temp_files);
    csa_ = std::move(parts.csa);
    D_ = std::move(parts.D);
    D_.set_width(bits::width_for(docs_));
}

sa_range sort_index::match(std::span<const uint64_t> pattern) const
{
    if (!usable(pattern)) return {};
    return csa_.backward_search(pattern);
}

std::vector<hit> sort_index::counts(const sa_range& r) const
{
    std::vector<uint64_t> ds(r.len);
    for (uint64_t i = 0; i < r.len; ++i) ds[i] = D_[r.sp + i];
    std::sort(ds.begin(), ds.end());
    std::vector<hit> out;
    for (size_t i = 0; i < ds.size();) {
        size_t j = i;
        while (j < ds.size() && ds[j] == ds[i]) ++j;
        out.push_back({ds[i], j - i, 0.0});
        i = j;
    }
    return out;
}

std::vector<hit> sort_index::topk(std::span<const uint64_t> pattern, uint64_t k, ranking r) const
{
    check_k(k);
    const sa_range m = match(pattern);
    if (m.empty()) return {};
    std::vector<hit> all = counts(m);
    const uint64_t df = all.size();
    return rank_hits(std::move(all), k, r, docs_, df);
}

uint64_t sort_index::df(std::span<const uint64_t> pattern) const
{
    const sa_range m = match(pattern);
    return m.empty() ? 0 : counts(m).size();
}

void sort_index::serialize_components(writer& w) const
{
    write_child(w, "csa_full", csa_);
    write_child(w, "D", D_);
}

void sort_index::load_components(reader& r)
{
    csa_.load(r);
    D_.load(r);
    check_sizes(csa_.size() == n_ && D_.size() == n_, "SORT");
}

}  // namespace cds
