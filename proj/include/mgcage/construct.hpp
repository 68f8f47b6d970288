#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgcage/graph.hpp"
#include "mgcage/metrics.hpp"

namespace mgcage {

bool is_prime(int n);

/// Least prime p with 4z+1 <= p <= 5z. The window for z = 2 is [9,10], which
/// contains no prime; every other z >= 1 has one.
int smallest_prime_in_window(int z);

/// Incidence graph of the biaffine plane over F_q, possibly with the last
/// `gamma` point-columns and line-pencils deleted. Points are pairs (x,y),
/// lines are pairs [m,b]; (x,y) is adjacent to [m,b] iff y = m*x + b mod q.
/// Vertex ids are dense: points first, in (x,y) lexicographic order, then
/// lines in [m,b] order; x and m range over 0..kept()-1, y and b over 0..q-1.
struct BiaffinePlane {
  int q = 0;
  int gamma = 0;
  MixedGraph graph;

  int kept() const { return q - gamma; }
  int point_id(int x, int y) const;
  int line_id(int m, int b) const;
  bool is_point_vertex(int id) const;
  std::pair<int, int> point_coords(int id) const;  // (x, y)
  std::pair<int, int> line_coords(int id) const;   // (m, b)
  std::vector<int> point_block(int x) const;       // P_x: all (x, *)
  std::vector<int> line_block(int m) const;        // L_m: all [m, *]
};

/// Full plane: order 2q^2, q-regular, girth 6 for q >= 3 and 8 for q = 2.
BiaffinePlane biaffine_incidence(int q);

/// Deletes the last `gamma` point-blocks and line-blocks (composable: gamma
/// adds to what `plane` already removed). Result is (q-gamma)-regular of
/// order 2(q^2 - q*gamma), girth at least 6.
BiaffinePlane reduce_plane(const BiaffinePlane& plane, int gamma);

struct Recipe {
  std::string family;
  int p = 0;
  int q = 0;
  int gamma = 0;
  int z = 0;
  int g = 0;
  std::string base;
  std::vector<int> shifts;
};

/// Recomputed from the finished graph, never copied from intent.
struct Verification {
  RegularityReport regularity;
  GirthReport girth;
  bool strongly_connected = false;
  bool underlying_2connected = false;
};

struct ConstructionReport {
  MixedGraph graph;
  Recipe recipe;
  Verification verification;
};

/// reduce_plane wrapped with recipe and recomputed verification.
ConstructionReport reduce_blocks(const BiaffinePlane& plane, int gamma);

/// Vertices 0..p-1, arcs i -> (i+s) mod p for s in {1..z}; girth ceil(p/z).
MixedGraph circulant(int p, int z);

/// Adds every element of `source` onto `target` through the injective vertex
/// map `embedding` (embedding[v] is the target vertex for source vertex v).
MixedGraph amalgam(const MixedGraph& target, const MixedGraph& source,
                   const std::vector<int>& embedding);

/// The girth-5 family: reduce the biaffine plane over p = smallest prime in
/// [4z+1,5z] down to r blocks per side, then amalgamate circulant(p,z) into
/// every surviving block, matching circulant labels to second coordinates.
/// Result is a [z,r;5]-mixed graph of order 2pr.
ConstructionReport construct_g5(int z, int r);

/// Stored smallest r-regular girth-g graphs: complete graphs (r,3) for
/// r <= 10, complete bipartite (r,4) for r <= 10, cycles (2,g) for g <= 20,
/// plus the Petersen (3,5), Heawood (3,6), and Tutte-Coxeter (3,8) graphs.
MixedGraph cage_catalog(int r, int g);

/// g disjoint labeled copies of the r-regular girth-g graph `base`, plus z
/// pairwise-disjoint oriented perfect matchings from each copy i to copy
/// (i+1) mod g, realized as the cyclic shifts s = 0..z-1. Result is a
/// [z,r;g]-mixed graph of order g*|V(base)|.
ConstructionReport construct_gcopies(const MixedGraph& base, int g, int z);

/// construct_gcopies(cage_catalog(3,5), 5, 10): the 50-vertex [10,3;5]-mixed
/// graph, which meets the matching lower bound of 50.
ConstructionReport construct_cage_10_3_5();

}  // namespace mgcage
