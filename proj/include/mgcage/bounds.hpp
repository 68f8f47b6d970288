#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mgcage {

struct BoundEntry {
  int value;
  std::string method;
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

/// Every applicable lower and upper bound on n[z,r;g], the minimum order of a
/// [z,r;g]-mixed graph, each tagged with the method it comes from.
struct BoundsTable {
  int z = 0;
  int r = 0;
  int g = 0;
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  std::optional<int> best_lower;  // max of lower values
  std::optional<int> best_upper;  // min of upper values
};

/// Classical minimum order of an r-regular undirected graph with girth g:
/// odd g: 1 + r * sum_{i=0}^{(g-3)/2} (r-1)^i; even g: 2 * sum_{i=0}^{g/2-1} (r-1)^i.
/// Requires r >= 2, g >= 3.
int moore_bound(int r, int g);

/// Lower bound on n[1,r;g] from layering breadth-first trees around a shortest
/// cycle. Requires r >= 2, g >= 3.
int lower_bound_z1(int r, int g);

/// moore_bound(r,g) + 2z: the in- and out-neighborhoods of a root sit outside
/// its undirected breadth-first tree. Requires z >= 1, r >= 2, g >= 3.
int lower_bound_general(int z, int r, int g);

/// 2*p*r with p the smallest prime in [4z+1, 5z]; attained by construct_g5.
/// Requires z >= 1 and r in 1..p; z = 2 has no prime in its window.
int upper_bound_g5(int z, int r);

/// g * |V(H)| for the catalog (r,g)-cage H; attained by construct_gcopies.
/// Requires 1 <= z <= |V(H)|.
int upper_bound_gcopies(int z, int r, int g);

/// Collects every bound above that applies at (z,r,g), plus the sharp value
/// 50 known at exactly (10,3,5). Requires z >= 1, r >= 2, g >= 3.
BoundsTable bounds_table(int z, int r, int g);

}  // namespace mgcage
