#include "mgcage/search.hpp"

#include <algorithm>
#include <chrono>

#include "mgcage/bounds.hpp"
#include "mgcage/metrics.hpp"

namespace mgcage {

const char* search_status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "Found";
    case SearchStatus::exhausted: return "Exhausted";
    case SearchStatus::budget_exceeded: return "BudgetExceeded";
  }
  return "unknown";
}

namespace {

struct BudgetStop {};

// Canonical backtracking over labeled mixed graphs: vertex u contributes its
// edges to higher-indexed partners (ascending) and then its out-arcs
// (ascending heads), so each graph is generated exactly once. Adjacency lives
// in per-vertex bitmasks, which caps supported order at 64.
struct Searcher {
  int n, z, r, g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> edge_mask, out_mask, in_mask;
  std::vector<int> edeg, odeg, ideg;
  std::optional<MixedGraph> witness;

  Searcher(int n_, int z_, int r_, int g_, std::uint64_t budget_)
      : n(n_), z(z_), r(r_), g(g_), budget(budget_),
        edge_mask(n_, 0), out_mask(n_, 0), in_mask(n_, 0),
        edeg(n_, 0), odeg(n_, 0), ideg(n_, 0) {}

  void charge() {
    if (nodes == budget) throw BudgetStop{};
    ++nodes;
  }

  // True when `to` is reachable from `from` within max_depth steps (edges
  // both ways, arcs forward). Used before adding an element: a path of
  // length <= g-2 back across the new element closes a too-short cycle.
  bool bounded_reach(int from, int to, int max_depth) const {
    std::uint64_t visited = 1ull << from;
    std::uint64_t frontier = visited;
    const std::uint64_t goal = 1ull << to;
    for (int depth = 0; depth < max_depth; ++depth) {
      std::uint64_t next = 0;
      while (frontier) {
        const int u = __builtin_ctzll(frontier);
        frontier &= frontier - 1;
        next |= edge_mask[u] | out_mask[u];
      }
      next &= ~visited;
      if (next & goal) return true;
      if (next == 0) return false;
      visited |= next;
      frontier = next;
    }
    return false;
  }

  bool edge_safe(int u, int w) const {
    if (g <= 2) return true;
    return !bounded_reach(w, u, g - 2) && !bounded_reach(u, w, g - 2);
  }

  bool arc_safe(int tail, int head) const {
    if (g <= 2) return true;
    return !bounded_reach(head, tail, g - 2);
  }

  void put_edge(int u, int w) {
    edge_mask[u] |= 1ull << w;
    edge_mask[w] |= 1ull << u;
    ++edeg[u];
    ++edeg[w];
  }
  void drop_edge(int u, int w) {
    edge_mask[u] &= ~(1ull << w);
    edge_mask[w] &= ~(1ull << u);
    --edeg[u];
    --edeg[w];
  }
  void put_arc(int t, int h) {
    out_mask[t] |= 1ull << h;
    in_mask[h] |= 1ull << t;
    ++odeg[t];
    ++ideg[h];
  }
  void drop_arc(int t, int h) {
    out_mask[t] &= ~(1ull << h);
    in_mask[h] &= ~(1ull << t);
    --odeg[t];
    --ideg[h];
  }

  bool run() {
    if (g >= 3) {
      // Some relabeling of any witness puts vertex 0's edge partners at
      // {1..r} and its out-heads at {r+1..r+z}, so fixing them is lossless.
      if (r + z > n - 1) return false;
      for (int w = 1; w <= r; ++w) put_edge(0, w);
      for (int w = r + 1; w <= r + z; ++w) put_arc(0, w);
      return finish_vertex(0);
    }
    return fill_edges(0, 1);
  }

  bool fill_edges(int u, int start) {
    charge();
    const int deficit = r - edeg[u];
    if (deficit == 0) return fill_arcs(u, 0);
    int candidates = 0;
    for (int w = start; w < n; ++w) {
      if (edeg[w] < r) ++candidates;
    }
    if (candidates < deficit) return false;
    for (int w = start; w <= n - deficit; ++w) {
      if (edeg[w] >= r || !edge_safe(u, w)) continue;
      put_edge(u, w);
      if (fill_edges(u, w + 1)) return true;
      drop_edge(u, w);
    }
    return false;
  }

  bool fill_arcs(int u, int start) {
    charge();
    if (odeg[u] == z) return finish_vertex(u);
    for (int w = start; w < n; ++w) {
      if (w == u || ideg[w] >= z || !arc_safe(u, w)) continue;
      put_arc(u, w);
      if (fill_arcs(u, w + 1)) return true;
      drop_arc(u, w);
    }
    return false;
  }

  bool finish_vertex(int u) {
    const int unprocessed = n - 1 - u;
    // Future arcs all come from unprocessed tails, at most one per pair.
    for (int v = 0; v < n; ++v) {
      const int avail = unprocessed - (v > u ? 1 : 0);
      if (z - ideg[v] > avail) return false;
    }
    if (unprocessed > 0) {
      // Future edges pair two unprocessed vertices. u+1 < n <= 64 here, so
      // the shift is defined.
      const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
      const std::uint64_t above = (~0ull << (u + 1)) & all;
      int total_deficit = 0;
      for (int v = u + 1; v < n; ++v) {
        const int deficit = r - edeg[v];
        const int partners =
            unprocessed - 1 - __builtin_popcountll(edge_mask[v] & above);
        if (deficit > partners) return false;
        total_deficit += deficit;
      }
      if (total_deficit % 2 != 0) return false;
      return fill_edges(u + 1, u + 2);
    }
    return complete();
  }

  bool complete() {
    charge();
    MixedGraph candidate(n);
    for (int u = 0; u < n; ++u) {
      std::uint64_t higher = u + 1 >= 64 ? 0 : edge_mask[u] >> (u + 1) << (u + 1);
      while (higher) {
        const int w = __builtin_ctzll(higher);
        higher &= higher - 1;
        candidate.add_edge(u, w);
      }
      std::uint64_t heads = out_mask[u];
      while (heads) {
        const int h = __builtin_ctzll(heads);
        heads &= heads - 1;
        candidate.add_arc(u, h);
      }
    }
    // Pruning only guarantees no cycle shorter than g; the girth must also
    // not overshoot (or be absent entirely).
    if (girth(candidate).girth != g) return false;
    witness = std::move(candidate);
    return true;
  }
};

void validate_search_params(int z, int r, int g, int n) {
  if (z < 0 || r < 0 || z + r < 1 || g < 2 || n < 1) {
    fail(errc::invalid_parameters,
         "need z,r >= 0, z+r >= 1, g >= 2, n >= 1; got z=" + std::to_string(z) +
             " r=" + std::to_string(r) + " g=" + std::to_string(g) + " n=" + std::to_string(n));
  }
  if (n > 64) {
    fail(errc::invalid_parameters,
         "order " + std::to_string(n) + " exceeds the bitmask search limit of 64");
  }
}

}  // namespace

SearchOutcome search(int z, int r, int g, int n, std::uint64_t budget) {
  validate_search_params(z, r, g, n);
  const auto start = std::chrono::steady_clock::now();
  Searcher searcher(n, z, r, g, budget);
  SearchOutcome outcome;
  try {
    const bool found = searcher.run();
    outcome.status = found ? SearchStatus::found : SearchStatus::exhausted;
  } catch (const BudgetStop&) {
    outcome.status = SearchStatus::budget_exceeded;
  }
  outcome.nodes_expanded = searcher.nodes;
  outcome.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.status == SearchStatus::found) {
    outcome.witness = std::move(searcher.witness);
    const RegularityReport reg = regularity(*outcome.witness);
    if (outcome.witness->order() != n || !reg.is_regular || reg.z != z || reg.r != r) {
      fail(errc::internal, "search witness failed re-verification");
    }
  }
  return outcome;
}

CertifyOutcome certify_minimum(int z, int r, int g, int n_max, std::uint64_t budget) {
  validate_search_params(z, r, g, std::max(n_max, 1));
  int lo;
  if (z >= 1 && r >= 2 && g >= 3) {
    lo = *bounds_table(z, r, g).best_lower;
  } else if (g >= 3) {
    // Vertex 0's edge, out- and in-neighborhoods are pairwise disjoint once
    // 2-cycles are forbidden, and a girth-g graph contains a g-cycle.
    lo = std::max(g, 1 + r + 2 * z);
  } else {
    lo = std::max({2, r + 1, z + 1});
  }

  CertifyOutcome out;
  out.n_lo = lo;
  out.n_hi = n_max;
  out.conclusive = true;
  for (int n = lo; n <= n_max; ++n) {
    SearchOutcome one = search(z, r, g, n, budget);
    if (one.status == SearchStatus::budget_exceeded) out.conclusive = false;
    const bool found = one.status == SearchStatus::found;
    out.outcomes.emplace_back(n, std::move(one));
    if (found) {
      out.minimal_n = n;
      break;
    }
  }
  return out;
}

}  // namespace mgcage
