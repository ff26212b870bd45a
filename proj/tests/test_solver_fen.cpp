#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geodetic/decomposition.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/metric.hpp"
#include "geodetic/solver_exact.hpp"
#include "geodetic/solver_fen.hpp"
#include "test_support.hpp"

using namespace geodetic;
using testing::directed_cycle;
using testing::sample_ditree;
using testing::theta_graph;

TEST_CASE("oriented trees are answered by their extremal vertices") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Digraph t = gen_ditree(2 + static_cast<int>(seed % 12), 0.0, seed);
    const SolveResult r = solve_fen(t);
    CHECK(r.witness == extremal_vertices(t));
    CHECK(r.verified);
  }
}

TEST_CASE("solve_fen on the theta graph") {
  const SolveResult r = solve_fen(theta_graph());
  CHECK(r.size == 4);
  CHECK(r.verified);
  CHECK(extremal_vertices(theta_graph()).is_subset_of(r.witness));
}

TEST_CASE("solve_fen on the directed 4-cycle") {
  const SolveResult r = solve_fen(directed_cycle(4));
  CHECK(r.size == 2);
  CHECK(r.witness == VertexSet{0, 1});
}

TEST_CASE("2-cycles are rejected") {
  CHECK_THROWS_AS(solve_fen(sample_ditree()), HasTwoCycleError);
}

TEST_CASE("bare cycle solver on fixed shapes") {
  const SolveResult four = solve_bare_cycle(directed_cycle(4), VertexSet{0, 1, 2, 3});
  CHECK(four.size == 2);
  CHECK(four.witness == VertexSet{0, 1});

  // Alternating orientation: all four vertices extremal, nothing to add.
  const Digraph alternating(
      4, std::vector<std::pair<int, int>>{{0, 1}, {2, 1}, {2, 3}, {0, 3}});
  const SolveResult alt = solve_bare_cycle(alternating, VertexSet{0, 1, 2, 3});
  CHECK(alt.size == 4);
  CHECK(alt.witness == VertexSet{0, 1, 2, 3});

  // One source (0), one sink (3), arms of lengths 2 and 4.
  const Digraph arms(6, std::vector<std::pair<int, int>>{
                            {0, 1}, {1, 3}, {0, 2}, {2, 4}, {4, 5}, {5, 3}});
  const SolveResult r = solve_bare_cycle(arms, VertexSet{0, 1, 2, 3, 4, 5});
  CHECK(r.size == 3);
  CHECK(r.witness.contains(0));
  CHECK(r.witness.contains(3));
  const SolveResult oracle = solve_exact(arms);
  CHECK(oracle.size == 3);
}

TEST_CASE("bare cycle solver rejects core-bearing components") {
  CHECK_THROWS_AS(
      solve_bare_cycle(theta_graph(), VertexSet{0, 1, 2, 3, 4, 5, 6, 7}),
      PreconditionError);
}

TEST_CASE("witness always contains the extremal set") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Digraph d =
        gen_oriented_fen(5 + static_cast<int>(seed % 9),
                         static_cast<int>(seed % 4), seed);
    const SolveResult r = solve_fen(d);
    CHECK(extremal_vertices(d).is_subset_of(r.witness));
    CHECK(r.verified);
  }
}

TEST_CASE("restricting a minimum witness to the base keeps it geodetic") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Digraph d =
        gen_oriented_fen(4 + static_cast<int>(seed % 8),
                         1 + static_cast<int>(seed % 3), seed);
    const SolveResult exact = solve_exact(d);
    const Decomposition dec = decompose(d);
    std::vector<int> restricted = extremal_vertices(d).elements();
    for (int v : exact.witness) {
      if (std::binary_search(dec.base_vertices.begin(),
                             dec.base_vertices.end(), v)) {
        restricted.push_back(v);
      }
    }
    CHECK(is_geodetic(d, VertexSet(std::move(restricted))));
  }
}

TEST_CASE("the span between extremal inner vertices is closed over the extremal set") {
  int spans_checked = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Digraph d =
        gen_oriented_fen(10 + static_cast<int>(seed % 8), 2, seed);
    const Decomposition dec = decompose(d);
    for (const CorePath& p : dec.core_paths) {
      if (p.inner_extremals.size() < 3) continue;
      ++spans_checked;
      const VertexSet closed = closure(d, extremal_vertices(d));
      for (int idx = p.inner_extremals.front();
           idx <= p.inner_extremals.back(); ++idx) {
        CHECK(closed.contains(p.inner[static_cast<std::size_t>(idx)]));
      }
    }
  }
  CHECK(spans_checked > 0);
}

TEST_CASE("fen solver matches brute force on random oriented graphs") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const int n = 4 + static_cast<int>(seed % 11);
    const int fen = 1 + static_cast<int>(seed % 3);
    const Digraph d = gen_oriented_fen(n, fen, seed);
    const SolveResult fast = solve_fen(d);
    const SolveResult exact = solve_exact(d);
    CHECK(fast.size == exact.size);
    CHECK(fast.verified);
  }
}

TEST_CASE("hanging trees rooted at core-path inner vertices") {
  // Hubs 0 and 1; long path 0 -> 2 -> 3 <- 4 <- 1 whose middle vertex 3
  // feeds a pendant sink 8; both hub-side segments flow into 3.
  const Digraph junction(9, std::vector<std::pair<int, int>>{{0, 2},
                                                             {2, 3},
                                                             {4, 3},
                                                             {1, 4},
                                                             {3, 8},
                                                             {0, 5},
                                                             {5, 1},
                                                             {0, 6},
                                                             {6, 7},
                                                             {7, 1}});
  const SolveResult fast = solve_fen(junction);
  const SolveResult exact = solve_exact(junction);
  CHECK(fast.size == exact.size);
  CHECK(fast.verified);

  // Mirror shape: the middle vertex is fed by a pendant source.
  const Digraph source_junction(9, std::vector<std::pair<int, int>>{{2, 0},
                                                                    {3, 2},
                                                                    {3, 4},
                                                                    {4, 1},
                                                                    {8, 3},
                                                                    {0, 5},
                                                                    {5, 1},
                                                                    {0, 6},
                                                                    {6, 7},
                                                                    {7, 1}});
  const SolveResult fast2 = solve_fen(source_junction);
  const SolveResult exact2 = solve_exact(source_junction);
  CHECK(fast2.size == exact2.size);
}

TEST_CASE("random oriented graphs decorated with pendant trees") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    // Start from a small fen graph, then hang a pendant vertex off every
    // third vertex, alternating arc direction.
    const Digraph core = gen_oriented_fen(6 + static_cast<int>(seed % 5),
                                          1 + static_cast<int>(seed % 3), seed);
    std::vector<std::pair<int, int>> arcs;
    for (const Arc& a : core.arcs()) arcs.emplace_back(a.tail, a.head);
    int next = core.vertex_count();
    for (int v = 0; v < core.vertex_count(); v += 3) {
      if (v % 2 == 0) {
        arcs.emplace_back(v, next++);
      } else {
        arcs.emplace_back(next++, v);
      }
    }
    const Digraph d(next, arcs);
    const SolveResult fast = solve_fen(d);
    const SolveResult exact = solve_exact(d);
    CHECK(fast.size == exact.size);
    CHECK(fast.verified);
  }
}

TEST_CASE("disconnected oriented graphs are solved per component") {
  // A directed 4-cycle next to an oriented path.
  std::vector<std::pair<int, int>> arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                           {4, 5}, {5, 6}};
  const Digraph d(7, arcs);
  const SolveResult r = solve_fen(d);
  const SolveResult exact = solve_exact(d);
  CHECK(r.size == exact.size);
  CHECK(r.size == 4);  // two for the cycle, two for the path ends
}

TEST_CASE("fen witnesses are deterministic and thread independent") {
  for (std::uint64_t seed = 100; seed <= 110; ++seed) {
    const Digraph d = gen_oriented_fen(12, 3, seed);
    const SolveResult a = solve_fen(d);
    const SolveResult b = solve_fen(d, SolveOptions{3});
    CHECK(a.witness == b.witness);
  }
}
