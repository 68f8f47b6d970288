#include "mgcage/construct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mgcage {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int smallest_prime_in_window(int z) {
  if (z < 1) fail(errc::invalid_parameters, "z must be >= 1, got " + std::to_string(z));
  for (int p = 4 * z + 1; p <= 5 * z; ++p) {
    if (is_prime(p)) return p;
  }
  fail(errc::no_prime_in_range,
       "no prime in [" + std::to_string(4 * z + 1) + "," + std::to_string(5 * z) +
           "] for z=" + std::to_string(z));
}

int BiaffinePlane::point_id(int x, int y) const {
  if (x < 0 || x >= kept() || y < 0 || y >= q) {
    fail(errc::out_of_range, "point (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return x * q + y;
}

int BiaffinePlane::line_id(int m, int b) const {
  if (m < 0 || m >= kept() || b < 0 || b >= q) {
    fail(errc::out_of_range, "line [" + std::to_string(m) + "," + std::to_string(b) + "]");
  }
  return kept() * q + m * q + b;
}

bool BiaffinePlane::is_point_vertex(int id) const { return id < kept() * q; }

std::pair<int, int> BiaffinePlane::point_coords(int id) const {
  if (id < 0 || !is_point_vertex(id)) fail(errc::out_of_range, "point id " + std::to_string(id));
  return {id / q, id % q};
}

std::pair<int, int> BiaffinePlane::line_coords(int id) const {
  if (id < kept() * q || id >= graph.order()) {
    fail(errc::out_of_range, "line id " + std::to_string(id));
  }
  const int rel = id - kept() * q;
  return {rel / q, rel % q};
}

std::vector<int> BiaffinePlane::point_block(int x) const {
  std::vector<int> block(q);
  for (int y = 0; y < q; ++y) block[y] = point_id(x, y);
  return block;
}

std::vector<int> BiaffinePlane::line_block(int m) const {
  std::vector<int> block(q);
  for (int b = 0; b < q; ++b) block[b] = line_id(m, b);
  return block;
}

namespace {

// Incidence y = m*x + b over F_q, restricted to x < kx and m < km.
BiaffinePlane build_plane(int q, int gamma) {
  BiaffinePlane plane;
  plane.q = q;
  plane.gamma = gamma;
  const int k = q - gamma;
  plane.graph = MixedGraph(2 * k * q);
  for (int m = 0; m < k; ++m) {
    for (int b = 0; b < q; ++b) {
      for (int x = 0; x < k; ++x) {
        plane.graph.add_edge(plane.point_id(x, (m * x + b) % q), plane.line_id(m, b));
      }
    }
  }
  return plane;
}

void enforce(bool ok, const std::string& what) {
  if (!ok) fail(errc::internal, "construction verification failed: " + what);
}

Verification verify_graph(const MixedGraph& g) {
  Verification v;
  v.regularity = regularity(g);
  v.girth = girth(g);
  v.strongly_connected = is_strongly_connected(g);
  v.underlying_2connected = underlying_is_2connected(g);
  return v;
}

}  // namespace

BiaffinePlane biaffine_incidence(int q) {
  if (!is_prime(q)) fail(errc::not_prime, std::to_string(q) + " is not prime");
  return build_plane(q, 0);
}

BiaffinePlane reduce_plane(const BiaffinePlane& plane, int gamma) {
  const int total = plane.gamma + gamma;
  if (gamma < 1 || total > plane.q - 1) {
    fail(errc::gamma_out_of_range, "gamma=" + std::to_string(gamma) + " on a plane of order " +
                                       std::to_string(plane.q) + " with " +
                                       std::to_string(plane.gamma) + " blocks already removed");
  }
  return build_plane(plane.q, total);
}

ConstructionReport reduce_blocks(const BiaffinePlane& plane, int gamma) {
  BiaffinePlane reduced = reduce_plane(plane, gamma);
  ConstructionReport report;
  report.recipe.family = "block-reduction";
  report.recipe.q = reduced.q;
  report.recipe.gamma = reduced.gamma;
  report.graph = reduced.graph;
  report.verification = verify_graph(report.graph);

  const int q = reduced.q;
  const int expected_r = q - reduced.gamma;
  enforce(report.graph.order() == 2 * (q * q - q * reduced.gamma), "order");
  enforce(report.verification.regularity.is_regular &&
              report.verification.regularity.r == expected_r &&
              report.verification.regularity.z == 0,
          "regularity");
  enforce(!report.verification.girth.girth || *report.verification.girth.girth >= 6,
          "girth >= 6");
  return report;
}

MixedGraph circulant(int p, int z) {
  if (p < 2 || z < 1 || z > p - 1) {
    fail(errc::invalid_parameters,
         "need p >= 2 and 1 <= z <= p-1, got p=" + std::to_string(p) + " z=" + std::to_string(z));
  }
  MixedGraph g(p);
  for (int i = 0; i < p; ++i) {
    for (int s = 1; s <= z; ++s) g.add_arc(i, (i + s) % p);
  }
  return g;
}

MixedGraph amalgam(const MixedGraph& target, const MixedGraph& source,
                   const std::vector<int>& embedding) {
  if (embedding.size() != static_cast<std::size_t>(source.order())) {
    fail(errc::bad_embedding, "embedding has " + std::to_string(embedding.size()) +
                                  " entries for a source of order " +
                                  std::to_string(source.order()));
  }
  std::set<int> images;
  for (int image : embedding) {
    if (image < 0 || image >= target.order()) {
      fail(errc::bad_embedding, "image " + std::to_string(image) + " outside target");
    }
    if (!images.insert(image).second) {
      fail(errc::bad_embedding, "image " + std::to_string(image) + " repeated");
    }
  }
  MixedGraph out = target;
  for (auto [u, v] : source.edges()) out.add_edge(embedding[u], embedding[v]);
  for (auto [u, v] : source.arcs()) out.add_arc(embedding[u], embedding[v]);
  return out;
}

ConstructionReport construct_g5(int z, int r) {
  const int p = smallest_prime_in_window(z);
  if (r < 1) fail(errc::invalid_parameters, "r must be >= 1, got " + std::to_string(r));
  if (r > p) {
    fail(errc::r_too_large,
         "r=" + std::to_string(r) + " exceeds p=" + std::to_string(p) + " for z=" + std::to_string(z));
  }
  BiaffinePlane plane = biaffine_incidence(p);
  if (r < p) plane = reduce_plane(plane, p - r);
  const MixedGraph ring = circulant(p, z);

  MixedGraph g = plane.graph;
  for (int i = 0; i < r; ++i) {
    g = amalgam(g, ring, plane.point_block(i));
    g = amalgam(g, ring, plane.line_block(i));
  }

  ConstructionReport report;
  report.recipe.family = "biaffine-amalgam";
  report.recipe.p = p;
  report.recipe.gamma = p - r;
  report.recipe.z = z;
  report.recipe.g = 5;
  for (int s = 1; s <= z; ++s) report.recipe.shifts.push_back(s);
  report.graph = std::move(g);
  report.verification = verify_graph(report.graph);

  enforce(report.graph.order() == 2 * p * r, "order 2pr");
  enforce(report.verification.regularity.is_regular &&
              report.verification.regularity.z == z && report.verification.regularity.r == r,
          "[z,r]-regularity");
  enforce(report.verification.girth.girth == 5, "girth exactly 5");
  return report;
}

namespace {

MixedGraph complete_graph(int n) {
  MixedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

MixedGraph complete_bipartite(int r) {
  MixedGraph g(2 * r);
  for (int u = 0; u < r; ++u) {
    for (int v = 0; v < r; ++v) g.add_edge(u, r + v);
  }
  return g;
}

MixedGraph cycle_graph(int n) {
  MixedGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

MixedGraph petersen_graph() {
  MixedGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

// Hamiltonian cycle plus chords at the listed offsets, the offset pattern
// repeating around the cycle.
MixedGraph lcf_graph(int n, const std::vector<int>& pattern) {
  MixedGraph g = cycle_graph(n);
  std::set<std::pair<int, int>> chords;
  for (int i = 0; i < n; ++i) {
    const int off = pattern[i % static_cast<int>(pattern.size())];
    const int j = ((i + off) % n + n) % n;
    chords.insert({std::min(i, j), std::max(i, j)});
  }
  for (auto [u, v] : chords) g.add_edge(u, v);
  return g;
}

}  // namespace

MixedGraph cage_catalog(int r, int g) {
  if (r == 3 && g == 5) return petersen_graph();
  if (r == 3 && g == 6) return lcf_graph(14, {5, -5});
  if (r == 3 && g == 8) return lcf_graph(30, {-13, -9, 7, -7, 9, 13});
  if (r == 2 && g >= 3 && g <= 20) return cycle_graph(g);
  if (g == 3 && r >= 2 && r <= 10) return complete_graph(r + 1);
  if (g == 4 && r >= 2 && r <= 10) return complete_bipartite(r);
  fail(errc::not_in_catalog,
       "no stored (" + std::to_string(r) + "," + std::to_string(g) + ")-cage");
}

ConstructionReport construct_gcopies(const MixedGraph& base, int g, int z) {
  if (base.arc_count() != 0) {
    fail(errc::invalid_parameters, "base graph must contain edges only");
  }
  const RegularityReport reg = regularity(base);
  if (!reg.is_regular) {
    fail(errc::base_not_regular,
         "base irregular at vertex " + std::to_string(reg.offending_vertex.value_or(-1)));
  }
  const GirthReport base_girth = girth(base);
  if (!base_girth.girth || *base_girth.girth != g) {
    fail(errc::base_girth_mismatch,
         "base girth is " +
             (base_girth.girth ? std::to_string(*base_girth.girth) : std::string("none")) +
             ", expected " + std::to_string(g));
  }
  const int n = base.order();
  if (z < 1) fail(errc::invalid_parameters, "z must be >= 1, got " + std::to_string(z));
  if (z > n) {
    fail(errc::z_too_large,
         "z=" + std::to_string(z) + " exceeds base order " + std::to_string(n));
  }

  MixedGraph out(g * n);
  for (int copy = 0; copy < g; ++copy) {
    for (auto [u, v] : base.edges()) out.add_edge(copy * n + u, copy * n + v);
  }
  // Shift s sends vertex j of copy i to vertex (j+s) mod n of copy i+1; the z
  // shifts are pairwise disjoint oriented perfect matchings.
  for (int copy = 0; copy < g; ++copy) {
    const int next = ((copy + 1) % g) * n;
    for (int s = 0; s < z; ++s) {
      for (int j = 0; j < n; ++j) out.add_arc(copy * n + j, next + (j + s) % n);
    }
  }

  ConstructionReport report;
  report.recipe.family = "g-copies";
  report.recipe.z = z;
  report.recipe.g = g;
  {
    std::ostringstream oss;
    oss << "r" << *reg.r << "-g" << g << "-n" << n;
    report.recipe.base = oss.str();
  }
  for (int s = 0; s < z; ++s) report.recipe.shifts.push_back(s);
  report.graph = std::move(out);
  report.verification = verify_graph(report.graph);

  enforce(report.graph.order() == g * n, "order g*n");
  enforce(report.verification.regularity.is_regular &&
              report.verification.regularity.z == z &&
              report.verification.regularity.r == *reg.r,
          "[z,r]-regularity");
  enforce(report.verification.girth.girth == g, "girth exactly g");
  return report;
}

ConstructionReport construct_cage_10_3_5() {
  ConstructionReport report = construct_gcopies(cage_catalog(3, 5), 5, 10);
  report.recipe.base = "petersen";
  enforce(report.verification.strongly_connected, "strong connectivity");
  enforce(report.verification.underlying_2connected, "2-connectivity");
  return report;
}

}  // namespace mgcage
