#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cds/collection.hpp"
#include "cds/csa_sada.hpp"
#include "cds/csa_wt.hpp"
#include "cds/plain_bv.hpp"
#include "cds/rmq.hpp"
#include "cds/wt_int.hpp"

namespace cds {

enum class index_algo : uint8_t { sada = 0, greedy = 1, sort = 2 };
std::string_view to_string(index_algo a);
/// Accepts "sada", "greedy", "sort" (any case); throws std::invalid_argument.
index_algo parse_index_algo(std::string_view s);

enum class ranking : uint8_t { frequency = 0, tfidf = 1 };
std::string_view to_string(ranking r);
/// Accepts "freq", "frequency", "tfidf".
ranking parse_ranking(std::string_view s);

struct hit {
    uint64_t doc = 0;
    uint64_t tf = 0;
    double score = 0;
    bool operator==(const hit&) const = default;
};

/// tf * ln(N / df).
double tfidf_score(uint64_t tf, uint64_t docs, uint64_t df);

/// Scores (doc, tf) pairs and keeps the best k by (score desc, tf desc, doc asc).
std::vector<hit> rank_hits(std::vector<hit> all, uint64_t k, ranking r, uint64_t docs, uint64_t df);

struct build_options {
    uint64_t sa_rate = 0;  // 0: 32 for SADA, min(2^20, n) otherwise
    std::string temp_dir;  // empty: the system temporary directory
    bool keep_temp = false;
};

//! Common interface of the three top-k document retrieval indexes.
/*!
 * Patterns are symbol sequences of the indexed collection. Patterns that are
 * empty or contain the terminator or separator never match. The suffix of
 * the lone terminator (SA rank 0, document N) is never reported.
 */
class document_index {
public:
    static constexpr std::string_view magic = "CDS.DIDX";

    virtual ~document_index() = default;

    virtual index_algo algo() const = 0;
    alphabet_mode mode() const { return mode_; }
    uint64_t doc_count() const { return docs_; }
    /// Length of the concatenated text.
    uint64_t size() const { return n_; }

    /// SA interval of the pattern; empty when it cannot match a document.
    virtual sa_range match(std::span<const uint64_t> pattern) const = 0;
    /// Throws std::invalid_argument for k == 0.
    virtual std::vector<hit> topk(std::span<const uint64_t> pattern, uint64_t k, ranking r = ranking::frequency) const = 0;
    virtual uint64_t df(std::span<const uint64_t> pattern) const = 0;

    void serialize(writer& w) const;
    /// Dispatches on the algorithm tag.
    static std::unique_ptr<document_index> load(reader& r);

protected:
    document_index() = default;
    document_index(alphabet_mode mode, uint64_t docs, uint64_t n) : mode_(mode), docs_(docs), n_(n) {}
    virtual void serialize_components(writer& w) const = 0;
    virtual void load_components(reader& r) = 0;

    static bool usable(std::span<const uint64_t> pattern);
    static void check_k(uint64_t k);

    alphabet_mode mode_ = alphabet_mode::byte;
    uint64_t docs_ = 0;
    uint64_t n_ = 0;
};

/// Builds the chosen index. Intermediate SA and BWT files live in
/// options.temp_dir and are removed unless keep_temp; their paths are
/// appended to temp_files when given.
std::unique_ptr<document_index> build_index(const collection& c, index_algo algo, const build_options& options = {},
                                            std::vector<std::string>* temp_files = nullptr);

std::unique_ptr<document_index> load_index_file(const std::string& path);
/// Writes the index and returns its size breakdown.
size_tree save_index_file(const document_index& idx, const std::string& path);

/// Zeroed bit_vectors of one length handed out per query and returned
/// cleared, so concurrent queries never share scratch space.
class scratch_pool {
public:
    explicit scratch_pool(uint64_t bits = 0) : bits_(bits) {}
    scratch_pool(const scratch_pool&) = delete;
    scratch_pool& operator=(const scratch_pool&) = delete;

    class lease {
    public:
        lease(scratch_pool& p, std::unique_ptr<bit_vector> bv) : pool_(&p), bv_(std::move(bv)) {}
        lease(lease&&) = default;
        ~lease();
        bool test(uint64_t i) const { return (*bv_)[i]; }
        /// Sets bit i; returns false if it was already set.
        bool mark(uint64_t i);

    private:
        scratch_pool* pool_;
        std::unique_ptr<bit_vector> bv_;
        std::vector<uint64_t> marked_;
    };

    lease acquire();
    uint64_t idle() const;
    /// Drops idle vectors and changes the length of future ones.
    void reset(uint64_t bits);

private:
    uint64_t bits_;
    mutable std::mutex mu_;
    std::vector<std::unique_ptr<bit_vector>> free_;
};

//! Psi-based CSA, document border, two RMQs over the previous and next
//! occurrence arrays, and one bit-compressed inverse SA per document.
class sada_index final : public document_index {
public:
    struct occurrence {
        uint64_t doc;
        uint64_t pos;  // SA position
        bool operator==(const occurrence&) const = default;
    };

    sada_index() : pool_(0) {}
    /// Semi-external build; see build_index.
    sada_index(const collection& c, const build_options& options, std::vector<std::string>* temp_files = nullptr);

    index_algo algo() const override { return index_algo::sada; }
    sa_range match(std::span<const uint64_t> pattern) const override;
    std::vector<hit> topk(std::span<const uint64_t> pattern, uint64_t k, ranking r = ranking::frequency) const override;
    uint64_t df(std::span<const uint64_t> pattern) const override;

    /// Distinct documents of D[sp..ep] with their leftmost positions, in
    /// discovery order. Requires 1 <= sp <= ep < n.
    std::vector<occurrence> distinct_docs(uint64_t sp, uint64_t ep) const;
    /// Same documents with their rightmost positions.
    std::vector<occurrence> distinct_docs_rightmost(uint64_t sp, uint64_t ep) const;
    /// Occurrences of doc in D[sp..ep], given its leftmost position l.
    uint64_t tf(uint64_t doc, uint64_t l, uint64_t sp, uint64_t ep) const;

    const csa_sada& csa() const { return csa_; }
    uint64_t doc_of_position(uint64_t i) const { return border_.rank(csa_.sa(i)); }
    const scratch_pool& pool() const { return pool_; }

private:
    void serialize_components(writer& w) const override;
    void load_components(reader& r) override;
    uint64_t doc_offset(uint64_t d) const { return d == 0 ? 0 : border_.select(d) + 1; }
    uint64_t local_rank(uint64_t doc, uint64_t text_pos) const { return doc_isa_[doc][text_pos - doc_offset(doc)]; }
    template <bool Rightmost, class Visit>
    void list(uint64_t sp, uint64_t ep, Visit&& visit) const;

    csa_sada csa_;
    plain_bv<true> border_;
    rmq_sct rminq_;
    rmq_sct rmaxq_;
    std::vector<int_vector> doc_isa_;
    mutable scratch_pool pool_;
};

using greedy_csa = csa_wt<wt_huff<rrr_vector>>;

//! BWT wavelet-tree CSA plus a balanced wavelet tree over the document array.
class greedy_index final : public document_index {
public:
    greedy_index() = default;
    greedy_index(const collection& c, const build_options& options, std::vector<std::string>* temp_files = nullptr);

    index_algo algo() const override { return index_algo::greedy; }
    sa_range match(std::span<const uint64_t> pattern) const override;
    /// Largest-interval-first traversal; ties go to the smaller node id.
    std::vector<hit> topk(std::span<const uint64_t> pattern, uint64_t k, ranking r = ranking::frequency) const override;
    uint64_t df(std::span<const uint64_t> pattern) const override;

    const greedy_csa& csa() const { return csa_; }
    const wt_int<plain_bv<false>>& wtd() const { return wtd_; }

private:
    void serialize_components(writer& w) const override;
    void load_components(reader& r) override;
    std::vector<hit> greedy(const sa_range& r, uint64_t k) const;

    greedy_csa csa_;
    wt_int<plain_bv<false>> wtd_;
};

//! BWT wavelet-tree CSA plus the plain bit-compressed document array.
class sort_index final : public document_index {
public:
    sort_index() = default;
    sort_index(const collection& c, const build_options& options, std::vector<std::string>* temp_files = nullptr);

    index_algo algo() const override { return index_algo::sort; }
    sa_range match(std::span<const uint64_t> pattern) const override;
    std::vector<hit> topk(std::span<const uint64_t> pattern, uint64_t k, ranking r = ranking::frequency) const override;
    uint64_t df(std::span<const uint64_t> pattern) const override;

    const greedy_csa& csa() const { return csa_; }
    const int_vector& doc_array() const { return D_; }

private:
    void serialize_components(writer& w) const override;
    void load_components(reader& r) override;
    std::vector<hit> counts(const sa_range& r) const;

    greedy_csa csa_;
    int_vector D_;
};

}  // namespace cds
