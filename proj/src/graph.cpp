#include "mgcage/graph.hpp"

#include <algorithm>
#include <sstream>

namespace mgcage {

const char* errc_name(errc code) {
  switch (code) {
    case errc::out_of_range: return "out_of_range";
    case errc::self_loop: return "self_loop";
    case errc::duplicate_element: return "duplicate_element";
    case errc::syntax: return "syntax";
    case errc::invalid_parameters: return "invalid_parameters";
    case errc::no_prime_in_range: return "no_prime_in_range";
    case errc::r_too_large: return "r_too_large";
    case errc::z_too_large: return "z_too_large";
    case errc::gamma_out_of_range: return "gamma_out_of_range";
    case errc::not_prime: return "not_prime";
    case errc::not_in_catalog: return "not_in_catalog";
    case errc::base_not_regular: return "base_not_regular";
    case errc::base_girth_mismatch: return "base_girth_mismatch";
    case errc::bad_embedding: return "bad_embedding";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::internal: return "internal";
  }
  return "unknown";
}

void fail(errc code, const std::string& message) {
  throw Error(code, std::string(errc_name(code)) + ": " + message);
}

namespace {

// Keeps `vec` sorted. Appending an element larger than the current back is
// O(1), which covers the common construction order.
void sorted_insert(std::vector<int>& vec, int value) {
  if (vec.empty() || vec.back() < value) {
    vec.push_back(value);
    return;
  }
  auto it = std::lower_bound(vec.begin(), vec.end(), value);
  vec.insert(it, value);
}

void sorted_insert(std::vector<std::pair<int, int>>& vec, std::pair<int, int> value) {
  if (vec.empty() || vec.back() < value) {
    vec.push_back(value);
    return;
  }
  auto it = std::lower_bound(vec.begin(), vec.end(), value);
  vec.insert(it, value);
}

bool sorted_contains(const std::vector<std::pair<int, int>>& vec, std::pair<int, int> value) {
  return std::binary_search(vec.begin(), vec.end(), value);
}

}  // namespace

MixedGraph::MixedGraph(int n) {
  if (n < 0) fail(errc::out_of_range, "order must be nonnegative, got " + std::to_string(n));
  n_ = n;
  edge_adj_.resize(n);
  out_adj_.resize(n);
  in_adj_.resize(n);
}

void MixedGraph::check_endpoints(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    std::ostringstream oss;
    oss << "endpoint (" << u << "," << v << ") outside 0.." << n_ - 1;
    fail(errc::out_of_range, oss.str());
  }
  if (u == v) fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
}

bool MixedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return sorted_contains(edges_, {u, v});
}

bool MixedGraph::has_arc(int tail, int head) const {
  return sorted_contains(arcs_, {tail, head});
}

bool MixedGraph::has(const Element& e) const {
  return e.is_edge() ? has_edge(e.u, e.v) : has_arc(e.u, e.v);
}

void MixedGraph::add_edge(int u, int v) {
  check_endpoints(u, v);
  if (u > v) std::swap(u, v);
  if (has_edge(u, v)) {
    fail(errc::duplicate_element,
         "edge {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
  }
  sorted_insert(edges_, {u, v});
  sorted_insert(edge_adj_[u], v);
  sorted_insert(edge_adj_[v], u);
}

void MixedGraph::add_arc(int tail, int head) {
  check_endpoints(tail, head);
  if (has_arc(tail, head)) {
    fail(errc::duplicate_element,
         "arc (" + std::to_string(tail) + "," + std::to_string(head) + ") already present");
  }
  sorted_insert(arcs_, {tail, head});
  sorted_insert(out_adj_[tail], head);
  sorted_insert(in_adj_[head], tail);
}

void MixedGraph::insert(const Element& e) {
  if (e.is_edge()) {
    add_edge(e.u, e.v);
  } else {
    add_arc(e.u, e.v);
  }
}

const std::vector<int>& MixedGraph::edge_neighbors(int u) const {
  if (u < 0 || u >= n_) fail(errc::out_of_range, "vertex " + std::to_string(u));
  return edge_adj_[u];
}

const std::vector<int>& MixedGraph::out_neighbors(int u) const {
  if (u < 0 || u >= n_) fail(errc::out_of_range, "vertex " + std::to_string(u));
  return out_adj_[u];
}

const std::vector<int>& MixedGraph::in_neighbors(int u) const {
  if (u < 0 || u >= n_) fail(errc::out_of_range, "vertex " + std::to_string(u));
  return in_adj_[u];
}

VertexDegrees MixedGraph::degrees(int u) const {
  if (u < 0 || u >= n_) fail(errc::out_of_range, "vertex " + std::to_string(u));
  return {static_cast<int>(edge_adj_[u].size()), static_cast<int>(out_adj_[u].size()),
          static_cast<int>(in_adj_[u].size())};
}

MixedGraph disjoint_union(const MixedGraph& g1, const MixedGraph& g2) {
  MixedGraph out(g1.order() + g2.order());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g1.arcs()) out.add_arc(u, v);
  const int shift = g1.order();
  for (auto [u, v] : g2.edges()) out.add_edge(u + shift, v + shift);
  for (auto [u, v] : g2.arcs()) out.add_arc(u + shift, v + shift);
  return out;
}

MixedGraph reversed(const MixedGraph& g) {
  MixedGraph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : g.arcs()) out.add_arc(v, u);
  return out;
}

std::vector<VertexDegrees> degree_profile(const MixedGraph& g) {
  std::vector<VertexDegrees> profile(g.order());
  for (int u = 0; u < g.order(); ++u) profile[u] = g.degrees(u);
  return profile;
}

}  // namespace mgcage
