#include "mgcage/metrics.hpp"

#include <algorithm>
#include <climits>
#include <queue>

namespace mgcage {

namespace {

void check_vertex(const MixedGraph& g, int u) {
  if (u < 0 || u >= g.order()) fail(errc::out_of_range, "vertex " + std::to_string(u));
}

// BFS from `from` toward `to`, edges both ways, arcs forward, never crossing
// `masked`. Gives up past `depth_cap`. Returns the arrival steps of a
// shortest path (empty vector when from == to).
std::optional<std::vector<WitnessStep>> masked_path(const MixedGraph& g, int from, int to,
                                                    const Element& masked, int depth_cap) {
  if (from == to) return std::vector<WitnessStep>{};
  if (depth_cap < 1) return std::nullopt;
  const int n = g.order();
  std::vector<int> dist(n, -1), parent(n, -1);
  std::vector<Element> via(n, Element::arc(-1, -1));
  std::queue<int> queue;
  dist[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    if (dist[u] >= depth_cap) break;  // deeper vertices cannot be discovered in cap
    auto visit = [&](int w, const Element& el) -> bool {
      if (el == masked || dist[w] != -1) return false;
      dist[w] = dist[u] + 1;
      parent[w] = u;
      via[w] = el;
      if (w == to) return true;
      queue.push(w);
      return false;
    };
    for (int w : g.edge_neighbors(u)) {
      if (visit(w, Element::edge(u, w))) goto done;
    }
    for (int w : g.out_neighbors(u)) {
      if (visit(w, Element::arc(u, w))) goto done;
    }
  }
done:
  if (dist[to] == -1) return std::nullopt;
  std::vector<WitnessStep> steps;
  for (int w = to; w != from; w = parent[w]) steps.push_back({w, via[w]});
  std::reverse(steps.begin(), steps.end());
  return steps;
}

// Cyclic shift so the walk starts (and ends) at its minimum vertex.
void rotate_to_min(std::vector<WitnessStep>& cycle) {
  if (cycle.empty()) return;
  auto min_it = std::min_element(
      cycle.begin(), cycle.end(),
      [](const WitnessStep& a, const WitnessStep& b) { return a.vertex < b.vertex; });
  std::rotate(cycle.begin(), min_it + 1, cycle.end());
}

bool all_alternating(const std::vector<WitnessStep>& cycle) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (cycle[i].via.kind == cycle[(i + 1) % k].via.kind) return false;
  }
  return true;
}

// Shared scaffolding for the anchored cycle enumerations: simple paths from
// each anchor s through vertices > s only, so every cycle is visited anchored
// at its minimum vertex.
struct CycleSearch {
  const MixedGraph& g;
  std::uint64_t remaining;
  std::vector<char> on_path;
  std::vector<WitnessStep> path;
  int anchor = -1;

  CycleSearch(const MixedGraph& graph, std::uint64_t budget)
      : g(graph), remaining(budget), on_path(graph.order(), 0) {}

  void charge() {
    if (remaining == 0) {
      fail(errc::budget_exceeded, "cycle enumeration budget exhausted");
    }
    --remaining;
  }

  // Invokes fn(el, w) for each element leaving u, edges first, sorted.
  template <typename Fn>
  void for_successors(int u, Fn&& fn) {
    for (int w : g.edge_neighbors(u)) fn(Element::edge(u, w), w);
    for (int w : g.out_neighbors(u)) fn(Element::arc(u, w), w);
  }

  bool closes_cycle(const Element& el, int w) const {
    if (w != anchor) return false;
    // A 2-cycle needs two distinct elements, not one edge walked both ways.
    return path.size() >= 2 || el != path.front().via;
  }
};

struct BruteforceSearch : CycleSearch {
  int max_len;
  int best = INT_MAX;
  std::vector<WitnessStep> best_cycle;

  BruteforceSearch(const MixedGraph& graph, int cap, std::uint64_t budget)
      : CycleSearch(graph, budget), max_len(cap) {}

  void run() {
    for (int s = 0; s < g.order() && best > 2; ++s) {
      anchor = s;
      on_path[s] = 1;
      dfs(s);
      on_path[s] = 0;
    }
  }

  void dfs(int u) {
    charge();
    const int closing_len = static_cast<int>(path.size()) + 1;
    if (closing_len > max_len || closing_len >= best) return;
    for_successors(u, [&](const Element& el, int w) {
      if (closing_len < best && closes_cycle(el, w) && closing_len >= 2) {
        best = closing_len;
        best_cycle = path;
        best_cycle.push_back({anchor, el});
        return;
      }
      if (w <= anchor || on_path[w]) return;
      on_path[w] = 1;
      path.push_back({w, el});
      dfs(w);
      path.pop_back();
      on_path[w] = 0;
    });
  }
};

// Enumerates cycles of exactly `target` length (the girth, so no shorter
// cycle exists) until one with two consecutive same-kind elements appears.
struct NonAlternatingSearch : CycleSearch {
  int target;
  bool found = false;

  NonAlternatingSearch(const MixedGraph& graph, int girth_len, std::uint64_t budget)
      : CycleSearch(graph, budget), target(girth_len) {}

  void run() {
    for (int s = 0; s < g.order() && !found; ++s) {
      anchor = s;
      on_path[s] = 1;
      dfs(s);
      on_path[s] = 0;
    }
  }

  void dfs(int u) {
    charge();
    const int closing_len = static_cast<int>(path.size()) + 1;
    if (closing_len > target || found) return;
    for_successors(u, [&](const Element& el, int w) {
      if (found) return;
      if (closing_len == target && closes_cycle(el, w)) {
        path.push_back({anchor, el});
        if (!all_alternating(path)) found = true;
        path.pop_back();
        return;
      }
      if (closing_len == target) return;  // only closing moves left at full depth
      if (w <= anchor || on_path[w]) return;
      on_path[w] = 1;
      path.push_back({w, el});
      dfs(w);
      path.pop_back();
      on_path[w] = 0;
    });
  }
};

}  // namespace

std::optional<int> mixed_distance(const MixedGraph& g, int from, int to) {
  check_vertex(g, from);
  check_vertex(g, to);
  auto steps = masked_path(g, from, to, Element::arc(-1, -1), g.order());
  if (!steps) return std::nullopt;
  return static_cast<int>(steps->size());
}

GirthReport girth(const MixedGraph& g) {
  int best = INT_MAX;
  std::vector<WitnessStep> best_cycle;
  // A shortest cycle through element x, traversed tail to head, is x plus a
  // shortest head-to-tail path avoiding x; minimizing over all x and both
  // edge orientations hits some element of some shortest cycle.
  auto consider = [&](const Element& x, int head, int tail) {
    if (best == 2) return;
    const int cap = best == INT_MAX ? g.order() : best - 2;
    auto path = masked_path(g, head, tail, x, cap);
    if (!path) return;
    const int len = static_cast<int>(path->size()) + 1;
    if (len < best) {
      best = len;
      best_cycle = std::move(*path);
      best_cycle.push_back({head, x});
    }
  };
  for (auto [u, v] : g.edges()) {
    consider(Element::edge(u, v), v, u);
    consider(Element::edge(u, v), u, v);
  }
  for (auto [t, h] : g.arcs()) consider(Element::arc(t, h), h, t);
  if (best == INT_MAX) return {std::nullopt, {}};
  rotate_to_min(best_cycle);
  return {best, std::move(best_cycle)};
}

GirthReport girth_bruteforce(const MixedGraph& g, int max_len, std::uint64_t budget) {
  BruteforceSearch search(g, max_len, budget);
  search.run();
  if (search.best == INT_MAX) return {std::nullopt, {}};
  return {search.best, std::move(search.best_cycle)};
}

bool witness_valid(const MixedGraph& g, const std::vector<WitnessStep>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 2) return false;
  std::vector<int> seen;
  for (const auto& step : cycle) {
    if (step.vertex < 0 || step.vertex >= g.order()) return false;
    seen.push_back(step.vertex);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const int prev = cycle[(i + k - 1) % k].vertex;
    const int cur = cycle[i].vertex;
    const Element& el = cycle[i].via;
    if (!g.has(el)) return false;
    if (el.is_edge()) {
      if (el != Element::edge(prev, cur)) return false;
    } else {
      if (el.u != prev || el.v != cur) return false;
    }
  }
  if (k == 2 && cycle[0].via == cycle[1].via) return false;
  return true;
}

RegularityReport regularity(const MixedGraph& g) {
  if (g.order() == 0) return {true, 0, 0, std::nullopt};
  const VertexDegrees base = g.degrees(0);
  const int r = base.undirected;
  const int z = base.out;
  for (int u = 0; u < g.order(); ++u) {
    const VertexDegrees d = g.degrees(u);
    if (d.undirected != r || d.out != z || d.in != z) {
      return {false, std::nullopt, std::nullopt, u};
    }
  }
  return {true, z, r, std::nullopt};
}

namespace {

int reach_count(const MixedGraph& g, int start, bool forward) {
  std::vector<char> seen(g.order(), 0);
  std::queue<int> queue;
  seen[start] = 1;
  queue.push(start);
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push(w);
      }
    };
    for (int w : g.edge_neighbors(u)) visit(w);
    for (int w : forward ? g.out_neighbors(u) : g.in_neighbors(u)) visit(w);
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const MixedGraph& g) {
  if (g.order() <= 1) return true;
  return reach_count(g, 0, true) == g.order() && reach_count(g, 0, false) == g.order();
}

bool underlying_is_2connected(const MixedGraph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<std::vector<int>> adj(n);
  auto link = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (auto [u, v] : g.edges()) link(u, v);
  for (auto [u, v] : g.arcs()) {
    if (!g.has_edge(u, v)) link(u, v);
  }
  for (int u = 0; u < n; ++u) {
    std::sort(adj[u].begin(), adj[u].end());
    adj[u].erase(std::unique(adj[u].begin(), adj[u].end()), adj[u].end());
  }
  // n is small enough here that one BFS per removed vertex beats cleverness.
  auto reaches_all_but = [&](int skip) {
    const int start = skip == 0 ? 1 : 0;
    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    seen[start] = 1;
    queue.push(start);
    int count = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : adj[u]) {
        if (w != skip && !seen[w]) {
          seen[w] = 1;
          ++count;
          queue.push(w);
        }
      }
    }
    return count == (skip < 0 ? n : n - 1);
  };
  if (!reaches_all_but(-1)) return false;
  for (int v = 0; v < n; ++v) {
    if (!reaches_all_but(v)) return false;
  }
  return true;
}

NeighborhoodSets neighborhoods(const MixedGraph& g, int u) {
  check_vertex(g, u);
  NeighborhoodSets sets;
  sets.undirected = g.edge_neighbors(u);
  sets.out = g.out_neighbors(u);
  sets.in = g.in_neighbors(u);
  auto merge = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  sets.projection = merge(sets.undirected, sets.out);
  sets.injection = merge(sets.undirected, sets.in);
  sets.star = merge(sets.projection, sets.in);
  return sets;
}

bool has_nonalternating_girth_cycle(const MixedGraph& g, std::uint64_t budget) {
  GirthReport report = girth(g);
  if (!report.girth) return false;
  // Along a cycle whose elements alternate edge, arc, edge, ... the two kinds
  // must occur equally often, so an alternating cycle has even length.
  if (*report.girth % 2 == 1) return true;
  if (!all_alternating(report.cycle)) return true;
  NonAlternatingSearch search(g, *report.girth, budget);
  search.run();
  return search.found;
}

}  // namespace mgcage
