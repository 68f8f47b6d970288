#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mgcage {

enum class errc {
  out_of_range,
  self_loop,
  duplicate_element,
  syntax,
  invalid_parameters,
  no_prime_in_range,
  r_too_large,
  z_too_large,
  gamma_out_of_range,
  not_prime,
  not_in_catalog,
  base_not_regular,
  base_girth_mismatch,
  bad_embedding,
  budget_exceeded,
  internal,
};

const char* errc_name(errc code);

/// All library failures are reported through this type; code() tells them apart.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

enum class ElementKind : std::uint8_t { edge, arc };

/// Uniform handle over an edge or arc. Edges are stored with u < v,
/// arcs as (tail, head).
struct Element {
  ElementKind kind;
  int u;
  int v;

  static Element edge(int a, int b) {
    if (a > b) std::swap(a, b);
    return {ElementKind::edge, a, b};
  }
  static Element arc(int tail, int head) { return {ElementKind::arc, tail, head}; }

  bool is_edge() const { return kind == ElementKind::edge; }
  bool is_arc() const { return kind == ElementKind::arc; }

  friend bool operator==(const Element&, const Element&) = default;
};

struct VertexDegrees {
  int undirected = 0;
  int out = 0;
  int in = 0;
  friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

/// A finite mixed graph: vertices 0..n-1, a set of undirected edges and a set
/// of directed arcs. No self-loops, no repeated edge, no repeated arc; an edge
/// and an arc on the same vertex pair may coexist (they form a 2-cycle, which
/// the validators report rather than the model forbidding).
///
/// Mutation happens while a graph is being built; afterwards all queries are
/// const and safe to share across threads.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(int n);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  bool has_edge(int u, int v) const;
  bool has_arc(int tail, int head) const;
  bool has(const Element& e) const;

  void add_edge(int u, int v);
  void add_arc(int tail, int head);
  void insert(const Element& e);

  /// Edges as (u,v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Arcs as (tail, head), sorted lexicographically.
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  const std::vector<int>& edge_neighbors(int u) const;
  const std::vector<int>& out_neighbors(int u) const;
  const std::vector<int>& in_neighbors(int u) const;

  VertexDegrees degrees(int u) const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> edge_adj_;
  std::vector<std::vector<int>> out_adj_;
  std::vector<std::vector<int>> in_adj_;

  void check_endpoints(int u, int v) const;
};

/// Order n1+n2; the second graph's labels are shifted by n1.
MixedGraph disjoint_union(const MixedGraph& g1, const MixedGraph& g2);

/// Every arc (u,v) becomes (v,u); edges unchanged.
MixedGraph reversed(const MixedGraph& g);

std::vector<VertexDegrees> degree_profile(const MixedGraph& g);

}  // namespace mgcage
