#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mgcage/graph.hpp"

namespace mgcage {

enum class SearchStatus { found, exhausted, budget_exceeded };

const char* search_status_name(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<MixedGraph> witness;  // set iff status == found
  std::uint64_t nodes_expanded = 0;
  double elapsed_seconds = 0.0;
};

/// Decides whether a [z,r;g]-mixed graph on exactly n vertices exists, by
/// canonical backtracking: vertices are completed in index order, each one
/// choosing its edge partners among higher indices and then its out-arc
/// heads, with short-cycle and degree-feasibility pruning. For g >= 3 vertex
/// 0's neighborhoods are fixed to {1..r} and {r+1..r+z}, which loses no
/// graphs up to relabeling. Deterministic for fixed inputs; the budget counts
/// backtracking nodes, and exceeding it is a status, not an error.
/// Requires z, r >= 0, z+r >= 1, g >= 2, 1 <= n <= 64.
SearchOutcome search(int z, int r, int g, int n, std::uint64_t budget = 10'000'000);

struct CertifyOutcome {
  std::optional<int> minimal_n;  // least order with status found, if any
  bool conclusive = false;       // no search in the scan ran out of budget
  int n_lo = 0;                  // scan range actually used
  int n_hi = 0;
  std::vector<std::pair<int, SearchOutcome>> outcomes;
};

/// Scans n upward from the best applicable lower bound to n_max, stopping at
/// the first order where search finds a witness. When conclusive, minimal_n
/// is exactly the minimum order n[z,r;g] (or no order <= n_max works).
CertifyOutcome certify_minimum(int z, int r, int g, int n_max,
                               std::uint64_t budget = 10'000'000);

}  // namespace mgcage
