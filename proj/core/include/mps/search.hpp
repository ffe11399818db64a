#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mps/integer_mps.hpp"
#include "mps/rational.hpp"

namespace mps {

enum class SearchMode {
  all,                 ///< every matrix, as stored
  up_to_equivalence,   ///< one canonical representative per class
};

struct SearchOptions {
  SearchMode mode = SearchMode::all;
  double budget_seconds = 0.0;  ///< 0: unlimited
  unsigned threads = 1;
  std::size_t max_n = 8;
  std::size_t max_results = 0;  ///< 0: unlimited; applied after sorting
};

struct SearchResult {
  std::vector<IntegerMps> matrices;  ///< lexicographic order of code sequences
  bool partial = false;              ///< budget ran out before completion
  std::uint64_t nodes = 0;           ///< rows tried
};

/// Candidate ratios j/2 for 0 <= j <= n - 2.
std::vector<Rational> candidate_ratios(std::size_t n);

/// Backtracking over symmetric sign patterns, row by row, keeping only rows
/// orthogonal to all earlier rows. In up_to_equivalence mode the diagonal is
/// sorted with p >= n/2 and the first rows of both diagonal blocks are fixed
/// as in the standard form; hits are reduced to canonical forms.
/// Throws TooLarge if n > options.max_n.
SearchResult exhaustive_search(std::size_t n, const Rational& d, const SearchOptions& options = {});

}  // namespace mps
