#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgcage/graph.hpp"

namespace mgcage {

/// One hop of a closed walk: the element traversed to reach `vertex`.
struct WitnessStep {
  int vertex;
  Element via;
  friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

/// girth is empty for acyclic graphs. When present, `cycle` is a shortest
/// cycle: cycle[i].via leads from cycle[i-1 mod k].vertex to cycle[i].vertex,
/// edges in either direction, arcs tail to head only.
struct GirthReport {
  std::optional<int> girth;
  std::vector<WitnessStep> cycle;
};

/// Fewest elements on a walk from `from` to `to`; edges usable both ways,
/// arcs only forward. Empty when `to` is unreachable.
std::optional<int> mixed_distance(const MixedGraph& g, int from, int to);

/// Exact girth with a deterministic shortest-cycle witness. Runs one bounded
/// search per element: a shortest cycle through element x has length
/// 1 + d(head, tail) in the graph without x, so the minimum over all x (both
/// orientations for edges) is the girth. Each search is depth-capped at two
/// below the best cycle found so far.
GirthReport girth(const MixedGraph& g);

/// Reference implementation: DFS over all simple cycles anchored at their
/// minimum vertex, counting node expansions against `budget`. Only counts
/// cycles of length <= max_len; girth is empty if none exists. Throws
/// errc::budget_exceeded rather than returning a wrong answer.
GirthReport girth_bruteforce(const MixedGraph& g, int max_len,
                             std::uint64_t budget = 10'000'000);

/// Checks that `cycle` is a closed walk in g of distinct vertices, every
/// element present in g, arcs traversed forward, and length >= 2.
bool witness_valid(const MixedGraph& g, const std::vector<WitnessStep>& cycle);

struct RegularityReport {
  bool is_regular = false;
  std::optional<int> z;  // common out-degree (= in-degree), set iff regular
  std::optional<int> r;  // common undirected degree, set iff regular
  std::optional<int> offending_vertex;
};

/// Totally regular: every vertex has undirected degree r and in-degree =
/// out-degree = z for one pair (z, r).
RegularityReport regularity(const MixedGraph& g);

/// Every ordered pair reachable, arcs traversed forward only.
bool is_strongly_connected(const MixedGraph& g);

/// 2-connectivity of the underlying undirected simple graph (arc direction
/// dropped, parallels merged). False for orders < 3.
bool underlying_is_2connected(const MixedGraph& g);

struct NeighborhoodSets {
  std::vector<int> undirected;  // N(u): edge neighbors
  std::vector<int> out;         // N+(u): arc heads
  std::vector<int> in;          // N-(u): arc tails
  std::vector<int> star;        // union of the three
  std::vector<int> projection;  // N(u) ∪ N+(u)
  std::vector<int> injection;   // N(u) ∪ N-(u)
};

NeighborhoodSets neighborhoods(const MixedGraph& g, int u);

/// True iff some shortest cycle is not alternating, i.e. somewhere along it
/// two consecutive elements are both edges or both arcs (the closing wrap
/// counts). Acyclic graphs: false. Odd girth forces a repeat by parity, so
/// only even-girth graphs need enumeration; that enumeration counts node
/// expansions against `budget` and throws errc::budget_exceeded on overrun.
bool has_nonalternating_girth_cycle(const MixedGraph& g,
                                    std::uint64_t budget = 10'000'000);

}  // namespace mgcage
