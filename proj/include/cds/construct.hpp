#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cds/collection.hpp"
#include "cds/int_vector.hpp"
#include "cds/plain_bv.hpp"

namespace cds {

/// Suffix array of text, whose last symbol must be a unique minimum.
/// Prefix doubling with ternary split-end partitioning over two bit-packed
/// arrays (signed group/SA array and inverse array); result width is
/// width_for(n - 1).
int_vector suffix_array(const int_vector& text);

/// Sorts the suffixes and streams SA to path (int_vector file framing).
void suffix_array_to_file(const int_vector& text, const std::string& path);

/// BWT[i] = T[(SA[i] - 1) mod n], reading SA and writing BWT sequentially.
void bwt_from_sa_file(const int_vector& text, const std::string& sa_path, const std::string& bwt_path);

/// Number of occurrences of every symbol smaller than c, for c in [0, sigma].
std::vector<uint64_t> symbol_prefix_counts(const int_vector& text, uint64_t sigma);

/// Psi[i] = ISA[(SA[i] + 1) mod n], computed by one pass over the BWT file.
int_vector psi_from_bwt_file(const std::string& bwt_path, const std::vector<uint64_t>& prefix_counts);

/// D[i] = number of separators before SA[i], streamed from the SA file.
int_vector doc_array_from_sa_file(const std::string& sa_path, const plain_bv<true>& border, uint64_t docs);

/// C (previous occurrence, stored +1 so -1 becomes 0) and C' (next
/// occurrence, sentinel n) of every position of D.
int_vector prev_occurrence_array(const int_vector& D, uint64_t docs);
int_vector next_occurrence_array(const int_vector& D, uint64_t docs);
std::pair<int_vector, int_vector> prev_next_arrays(const int_vector& D, uint64_t docs);

/// Inverse suffix array of each document followed by its own terminator;
/// entry d has doc_length(d) + 1 values of width width_for(doc_length(d)).
std::vector<int_vector> doc_inverse_suffix_arrays(const collection& c);
int_vector doc_inverse_suffix_array(const collection& c, uint64_t d);

}  // namespace cds
