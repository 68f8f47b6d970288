#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "mgcage/construct.hpp"
#include "mgcage/graph.hpp"
#include "mgcage/metrics.hpp"
#include "test_util.hpp"

using namespace mgcage;

namespace {

MixedGraph undirected_cycle(int n) {
  MixedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MixedGraph digon() {
  MixedGraph g(2);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  return g;
}

// Edges {0,1},{2,3}, arcs (1,2),(3,0): its only cycle alternates edge/arc.
MixedGraph alternating_square() {
  MixedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_arc(1, 2);
  g.add_arc(3, 0);
  return g;
}

}  // namespace

TEST_CASE("mixed distance basics") {
  MixedGraph g(2);
  g.add_arc(0, 1);
  CHECK(mixed_distance(g, 0, 0) == 0);
  CHECK(mixed_distance(g, 0, 1) == 1);
  CHECK(!mixed_distance(g, 1, 0).has_value());
  CHECK_THROWS_AS((void)mixed_distance(g, 0, 2), Error);

  const MixedGraph ring = circulant(13, 3);
  CHECK(mixed_distance(ring, 0, 12) == 4);
  CHECK(mixed_distance(ring, 0, 3) == 1);
  CHECK(mixed_distance(ring, 3, 0) == 4);
}

TEST_CASE("mixed distance respects edge symmetry and arc direction") {
  MixedGraph g(4);
  g.add_edge(0, 1);
  g.add_arc(1, 2);
  g.add_edge(2, 3);
  CHECK(mixed_distance(g, 0, 3) == 3);
  CHECK(mixed_distance(g, 3, 2) == 1);
  CHECK(!mixed_distance(g, 3, 0).has_value());
}

TEST_CASE("girth on the standard examples") {
  CHECK(girth(undirected_cycle(5)).girth == 5);
  CHECK(girth(digon()).girth == 2);
  CHECK(girth(circulant(13, 3)).girth == 5);
  CHECK(girth(biaffine_incidence(3).graph).girth == 6);

  MixedGraph edge_arc(2);
  edge_arc.add_edge(0, 1);
  edge_arc.add_arc(0, 1);
  CHECK(girth(edge_arc).girth == 2);

  MixedGraph forest(4);
  forest.add_edge(0, 1);
  forest.add_arc(1, 2);
  forest.add_arc(1, 3);
  const GirthReport report = girth(forest);
  CHECK(!report.girth.has_value());
  CHECK(report.cycle.empty());
}

TEST_CASE("girth witnesses validate and are deterministic") {
  const MixedGraph ring = circulant(9, 2);
  const GirthReport a = girth(ring);
  const GirthReport b = girth(ring);
  REQUIRE(a.girth == 5);
  CHECK(a.cycle.size() == 5);
  CHECK(witness_valid(ring, a.cycle));
  CHECK(a.cycle == b.cycle);
  // The walk closes at the minimum vertex on the cycle.
  int least = ring.order();
  for (const auto& step : a.cycle) least = std::min(least, step.vertex);
  CHECK(a.cycle.back().vertex == least);
}

TEST_CASE("witness_valid rejects corrupted cycles") {
  const MixedGraph c5 = undirected_cycle(5);
  GirthReport report = girth(c5);
  REQUIRE(witness_valid(c5, report.cycle));

  auto broken = report.cycle;
  broken[1].vertex = broken[0].vertex;  // repeated vertex
  CHECK(!witness_valid(c5, broken));

  broken = report.cycle;
  broken.pop_back();  // no longer closes
  CHECK(!witness_valid(c5, broken));

  broken = report.cycle;
  broken[2].via = Element::edge(0, 3);  // element not on the walk
  CHECK(!witness_valid(c5, broken));

  CHECK(!witness_valid(c5, {}));

  // A 2-cycle may not reuse one edge in both directions.
  MixedGraph pair(2);
  pair.add_edge(0, 1);
  CHECK(!witness_valid(
      pair, {{1, Element::edge(0, 1)}, {0, Element::edge(0, 1)}}));
}

TEST_CASE("bruteforce girth agrees and respects max_len") {
  const MixedGraph c5 = undirected_cycle(5);
  CHECK(girth_bruteforce(c5, 6).girth == 5);
  CHECK(!girth_bruteforce(c5, 4).girth.has_value());

  MixedGraph forest(3);
  forest.add_edge(0, 1);
  CHECK(!girth_bruteforce(forest, 8).girth.has_value());

  CHECK_THROWS_AS((void)girth_bruteforce(biaffine_incidence(5).graph, 8, 100), Error);
}

TEST_CASE("oracle equivalence on random graphs") {
  std::mt19937 rng(424242);
  int with_cycles = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const double ep = (trial % 3) * 0.2 + 0.1;
    const double ap = (trial % 4) * 0.1 + 0.05;
    const MixedGraph g = random_mixed_graph(rng, n, ep, ap);
    const GirthReport fast = girth(g);
    const GirthReport slow = girth_bruteforce(g, n);
    CHECK(fast.girth == slow.girth);
    if (fast.girth) {
      ++with_cycles;
      CHECK(witness_valid(g, fast.cycle));
      CHECK(witness_valid(g, slow.cycle));
      CHECK(static_cast<int>(fast.cycle.size()) == *fast.girth);
    }
  }
  CHECK(with_cycles > 40);
}

TEST_CASE("girth and strong connectivity are reverse-invariant") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const MixedGraph g = random_mixed_graph(rng, 2 + static_cast<int>(rng() % 8), 0.25, 0.2);
    const MixedGraph rev = reversed(g);
    CHECK(girth(g).girth == girth(rev).girth);
    CHECK(is_strongly_connected(g) == is_strongly_connected(rev));
  }
}

TEST_CASE("mixed distance triangle inequality and arc-free symmetry") {
  std::mt19937 rng(1003);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const MixedGraph g = random_mixed_graph(rng, n, 0.3, 0.25);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
          const auto uv = mixed_distance(g, u, v);
          const auto vw = mixed_distance(g, v, w);
          const auto uw = mixed_distance(g, u, w);
          if (uv && vw) {
            REQUIRE(uw.has_value());
            CHECK(*uw <= *uv + *vw);
          }
        }
      }
    }
    const MixedGraph undirected = random_mixed_graph(rng, n, 0.4, 0.0);
    bool all_reachable = true;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const auto d = mixed_distance(undirected, u, v);
        CHECK(d == mixed_distance(undirected, v, u));
        all_reachable = all_reachable && d.has_value();
      }
    }
    // With no arcs, strong connectivity is plain connectivity.
    CHECK(is_strongly_connected(undirected) == all_reachable);
  }
}

TEST_CASE("regularity reports") {
  const RegularityReport petersen = regularity(cage_catalog(3, 5));
  CHECK(petersen.is_regular);
  CHECK(petersen.z == 0);
  CHECK(petersen.r == 3);

  const RegularityReport ring = regularity(circulant(13, 3));
  CHECK(ring.is_regular);
  CHECK(ring.z == 3);
  CHECK(ring.r == 0);

  MixedGraph lopsided(3);
  lopsided.add_edge(0, 1);
  const RegularityReport bad = regularity(lopsided);
  CHECK(!bad.is_regular);
  CHECK(bad.offending_vertex == 2);
  CHECK(!bad.z.has_value());

  MixedGraph skew(2);  // out-degree 1 but in-degree 0 at vertex 0
  skew.add_arc(0, 1);
  const RegularityReport unbalanced = regularity(skew);
  CHECK(!unbalanced.is_regular);
  CHECK(unbalanced.offending_vertex == 0);

  CHECK(regularity(MixedGraph(0)).is_regular);
  CHECK(regularity(MixedGraph(1)).is_regular);
}

TEST_CASE("strong connectivity") {
  MixedGraph tri(3);
  tri.add_arc(0, 1);
  tri.add_arc(1, 2);
  tri.add_arc(2, 0);
  CHECK(is_strongly_connected(tri));

  MixedGraph arc(2);
  arc.add_arc(0, 1);
  CHECK(!is_strongly_connected(arc));

  CHECK(is_strongly_connected(undirected_cycle(5)));
  CHECK(is_strongly_connected(MixedGraph(1)));
  CHECK(is_strongly_connected(MixedGraph(0)));
  CHECK(!is_strongly_connected(MixedGraph(2)));

  MixedGraph mixed(3);  // edge makes the pair mutually reachable
  mixed.add_edge(0, 1);
  mixed.add_arc(1, 2);
  mixed.add_arc(2, 0);
  CHECK(is_strongly_connected(mixed));
}

TEST_CASE("underlying 2-connectivity") {
  MixedGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(!underlying_is_2connected(path));

  CHECK(underlying_is_2connected(undirected_cycle(5)));
  CHECK(!underlying_is_2connected(MixedGraph(2)));
  CHECK(!underlying_is_2connected(digon()));

  // Direction does not matter; a parallel edge+arc pair is one underlying edge.
  MixedGraph tri(3);
  tri.add_arc(0, 1);
  tri.add_edge(0, 1);
  tri.add_arc(1, 2);
  tri.add_edge(0, 2);
  CHECK(underlying_is_2connected(tri));

  MixedGraph cut(5);  // two triangles sharing vertex 2
  cut.add_edge(0, 1);
  cut.add_edge(1, 2);
  cut.add_edge(0, 2);
  cut.add_edge(2, 3);
  cut.add_edge(3, 4);
  cut.add_edge(2, 4);
  CHECK(!underlying_is_2connected(cut));

  MixedGraph split(4);  // disconnected
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK(!underlying_is_2connected(split));
}

TEST_CASE("neighborhood sets") {
  MixedGraph g(4);
  g.add_edge(0, 1);
  g.add_arc(0, 2);
  g.add_arc(3, 0);
  const NeighborhoodSets sets = neighborhoods(g, 0);
  CHECK(sets.undirected == std::vector<int>{1});
  CHECK(sets.out == std::vector<int>{2});
  CHECK(sets.in == std::vector<int>{3});
  CHECK(sets.star == std::vector<int>{1, 2, 3});
  CHECK(sets.projection == std::vector<int>{1, 2});
  CHECK(sets.injection == std::vector<int>{1, 3});

  const NeighborhoodSets isolated = neighborhoods(MixedGraph(1), 0);
  CHECK(isolated.star.empty());
  CHECK(isolated.projection.empty());

  CHECK_THROWS_AS((void)neighborhoods(g, 4), Error);

  // Overlapping sets merge, not double-count.
  MixedGraph overlap(2);
  overlap.add_edge(0, 1);
  overlap.add_arc(0, 1);
  overlap.add_arc(1, 0);
  const NeighborhoodSets o = neighborhoods(overlap, 0);
  CHECK(o.star == std::vector<int>{1});
  CHECK(o.projection == std::vector<int>{1});
  CHECK(o.injection == std::vector<int>{1});
}

TEST_CASE("nonalternating girth cycle predicate") {
  CHECK(has_nonalternating_girth_cycle(undirected_cycle(5)));   // odd girth
  CHECK(has_nonalternating_girth_cycle(undirected_cycle(4)));   // consecutive edges
  CHECK(has_nonalternating_girth_cycle(digon()));               // consecutive arcs
  CHECK(!has_nonalternating_girth_cycle(alternating_square()));

  MixedGraph edge_arc(2);  // 2-cycle made of one edge and one arc alternates
  edge_arc.add_edge(0, 1);
  edge_arc.add_arc(0, 1);
  CHECK(!has_nonalternating_girth_cycle(edge_arc));

  MixedGraph forest(3);
  forest.add_edge(0, 1);
  CHECK(!has_nonalternating_girth_cycle(forest));

  // Two squares sharing no vertices: one alternating, one all-edges.
  MixedGraph two(8);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  two.add_arc(1, 2);
  two.add_arc(3, 0);
  two.add_edge(4, 5);
  two.add_edge(5, 6);
  two.add_edge(6, 7);
  two.add_edge(4, 7);
  CHECK(has_nonalternating_girth_cycle(two));

  // All girth cycles alternate here, so the verdict needs the enumeration,
  // which a tiny budget cuts short.
  MixedGraph many(0);
  for (int copy = 0; copy < 10; ++copy) many = disjoint_union(many, alternating_square());
  CHECK(!has_nonalternating_girth_cycle(many));
  CHECK_THROWS_AS((void)has_nonalternating_girth_cycle(many, 10), Error);
}
