#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "geodetic/decomposition.hpp"
#include "geodetic/generators.hpp"
#include "test_support.hpp"

using namespace geodetic;
using testing::directed_cycle;
using testing::sample_ditree;
using testing::theta_graph;

TEST_CASE("a tree decomposes into one rootless hanging tree") {
  const Decomposition dec = decompose(sample_ditree());
  CHECK(dec.base_vertices.empty());
  CHECK(dec.core_vertices.empty());
  CHECK(dec.core_paths.empty());
  CHECK(dec.fen_total == 0);
  REQUIRE(dec.hanging_trees.size() == 1);
  CHECK_FALSE(dec.hanging_trees[0].root.has_value());
  CHECK(dec.hanging_trees[0].members.size() == 13);
}

TEST_CASE("theta graph decomposition") {
  const Decomposition dec = decompose(theta_graph());
  CHECK(dec.fen_total == 2);
  CHECK(dec.core_vertices == std::vector<int>{0, 1});
  CHECK(dec.core_paths.size() == 3);
  CHECK(dec.hanging_trees.empty());
  CHECK(dec.bare_cycle_components.empty());
  for (const CorePath& p : dec.core_paths) {
    CHECK(p.cls == PathClass::dipath);
    REQUIRE(p.candidates.size() == 1);
    CHECK(p.candidates[0] == p.inner.front());
  }
  const VertexSet cand = extract_candidates(theta_graph(), dec);
  CHECK(cand == VertexSet{0, 1, 2, 3, 5});
  CHECK(cand.size() <= 8 * dec.fen_total - 8);
}

TEST_CASE("directed cycle is a bare cycle component") {
  const Decomposition dec = decompose(directed_cycle(4));
  CHECK(dec.fen_total == 1);
  CHECK(dec.core_vertices.empty());
  CHECK(dec.base_vertices == std::vector<int>{0, 1, 2, 3});
  REQUIRE(dec.bare_cycle_components.size() == 1);
  CHECK(dec.bare_cycle_components[0] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("one break yields the endpoint-adjacent candidates") {
  // Hubs 0 and 1; one path whose middle inner vertex is a sink, plus two
  // plain dipaths.
  const Digraph d(8, std::vector<std::pair<int, int>>{{0, 2},
                                                      {2, 3},
                                                      {4, 3},
                                                      {1, 4},
                                                      {0, 5},
                                                      {5, 1},
                                                      {0, 6},
                                                      {6, 7},
                                                      {7, 1}});
  const Decomposition dec = decompose(d);
  CHECK(dec.fen_total == 2);
  const auto it = std::find_if(
      dec.core_paths.begin(), dec.core_paths.end(),
      [](const CorePath& p) { return p.cls == PathClass::one_extremal; });
  REQUIRE(it != dec.core_paths.end());
  CHECK(it->inner_extremals == std::vector<int>{1});
  CHECK(VertexSet(it->candidates) == VertexSet{2, 4});
}

TEST_CASE("two breaks yield the successor of the source-side break") {
  const Digraph d(10, std::vector<std::pair<int, int>>{{2, 0},
                                                       {3, 2},
                                                       {3, 4},
                                                       {4, 5},
                                                       {6, 5},
                                                       {1, 6},
                                                       {0, 7},
                                                       {7, 1},
                                                       {0, 8},
                                                       {8, 9},
                                                       {9, 1}});
  const Decomposition dec = decompose(d);
  const auto it = std::find_if(
      dec.core_paths.begin(), dec.core_paths.end(),
      [](const CorePath& p) { return p.cls == PathClass::two_extremals; });
  REQUIRE(it != dec.core_paths.end());
  CHECK(it->orientation_breaks == std::vector<int>{1, 3});
  CHECK(it->candidates == std::vector<int>{4});
}

TEST_CASE("three breaks yield no candidates") {
  // Path a-2-3-4-5-b with breaks at inner vertices 3 (source), 4 (sink)
  // and 5 (source).
  const Digraph d(9, std::vector<std::pair<int, int>>{{2, 0},
                                                      {3, 2},
                                                      {3, 4},
                                                      {5, 4},
                                                      {5, 1},
                                                      {0, 6},
                                                      {6, 1},
                                                      {0, 7},
                                                      {7, 8},
                                                      {8, 1}});
  const Decomposition dec = decompose(d);
  const auto it = std::find_if(
      dec.core_paths.begin(), dec.core_paths.end(),
      [](const CorePath& p) { return p.cls == PathClass::many_extremals; });
  REQUIRE(it != dec.core_paths.end());
  CHECK(it->candidates.empty());
  CHECK(it->orientation_breaks.size() == 3);
}

TEST_CASE("core cycles are walked once and classified") {
  // Two directed triangles joined by a dipath.
  const Digraph d(8, std::vector<std::pair<int, int>>{{0, 1},
                                                      {1, 2},
                                                      {2, 0},
                                                      {0, 3},
                                                      {3, 4},
                                                      {4, 5},
                                                      {5, 6},
                                                      {6, 7},
                                                      {7, 5}});
  const Decomposition dec = decompose(d);
  CHECK(dec.fen_total == 2);
  CHECK(dec.core_vertices == std::vector<int>{0, 5});
  REQUIRE(dec.core_paths.size() == 3);
  int cycles = 0;
  for (const CorePath& p : dec.core_paths) {
    if (p.endpoint_a == p.endpoint_b) ++cycles;
    CHECK(p.cls == PathClass::dipath);
  }
  CHECK(cycles == 2);
  CHECK(extract_candidates(d, dec) == VertexSet{0, 1, 3, 5, 6});
}

TEST_CASE("extract_candidates rejects 2-cycles") {
  const Digraph d = sample_ditree();
  const Decomposition dec = decompose(d);
  CHECK_THROWS_AS(extract_candidates(d, dec), HasTwoCycleError);
}

TEST_CASE("decomposition partitions the vertex set") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Digraph d = gen_oriented_fen(14, 1 + static_cast<int>(seed % 3), seed);
    const Decomposition dec = decompose(d);

    std::vector<int> seen(static_cast<std::size_t>(d.vertex_count()), 0);
    for (int v : dec.base_vertices) ++seen[static_cast<std::size_t>(v)];
    for (const HangingTree& t : dec.hanging_trees) {
      for (int v : t.members) ++seen[static_cast<std::size_t>(v)];
      if (t.root) CHECK(std::binary_search(dec.base_vertices.begin(),
                                           dec.base_vertices.end(), *t.root));
    }
    for (int v = 0; v < d.vertex_count(); ++v) CHECK(seen[v] == 1);

    // Every base vertex is a core vertex, a core-path inner vertex, or a
    // bare-cycle member, exactly once.
    std::vector<int> role(static_cast<std::size_t>(d.vertex_count()), 0);
    for (int v : dec.core_vertices) ++role[static_cast<std::size_t>(v)];
    for (const CorePath& p : dec.core_paths) {
      for (int v : p.inner) ++role[static_cast<std::size_t>(v)];
    }
    for (const auto& cyc : dec.bare_cycle_components) {
      for (int v : cyc) ++role[static_cast<std::size_t>(v)];
    }
    for (int v : dec.base_vertices) CHECK(role[v] == 1);
  }
}

TEST_CASE("fen equals edges minus vertices plus components") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Digraph d = gen_oriented_fen(12, static_cast<int>(seed % 4), seed);
    const Decomposition dec = decompose(d);
    const UndirectedGraph g = underlying_graph(d);
    const int comps = static_cast<int>(underlying_components(d).size());
    CHECK(dec.fen_total == static_cast<int>(g.edges.size()) - g.n + comps);
  }
}

TEST_CASE("the base graph is a fixed point of leaf removal") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Digraph d = gen_oriented_fen(14, 2, seed);
    const Decomposition dec = decompose(d);
    if (dec.base_vertices.empty()) continue;
    const Digraph base = induced_subgraph(d, dec.base_vertices);
    const Decomposition again = decompose(base);
    CHECK(again.base_vertices.size() == dec.base_vertices.size());
    CHECK(again.hanging_trees.empty());
  }
}

TEST_CASE("structural and candidate bounds on core-bearing graphs") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int fen = 2 + static_cast<int>(seed % 3);
    const Digraph d = gen_oriented_fen(8 + static_cast<int>(seed % 9), fen, seed);
    const Decomposition dec = decompose(d);
    if (!dec.bare_cycle_components.empty() || dec.core_vertices.empty()) {
      continue;
    }
    ++checked;
    CHECK(static_cast<int>(dec.core_vertices.size()) <= 2 * dec.fen_total - 2);
    CHECK(static_cast<int>(dec.core_paths.size()) <= 3 * dec.fen_total - 3);
    CHECK(extract_candidates(d, dec).size() <= 8 * dec.fen_total - 8);
    for (const CorePath& p : dec.core_paths) {
      CHECK(p.candidates.size() <= 2);
      if (p.orientation_breaks.empty()) CHECK(p.cls == PathClass::dipath);
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("a dipath with no breaks is uniformly oriented") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Digraph d = gen_oriented_fen(12, 2, seed);
    const Decomposition dec = decompose(d);
    for (const CorePath& p : dec.core_paths) {
      if (p.cls != PathClass::dipath || p.inner.empty()) continue;
      const bool forward = d.has_arc(p.endpoint_a, p.inner.front());
      const bool backward = d.has_arc(p.endpoint_b, p.inner.back());
      CHECK(forward != backward);
      for (std::size_t i = 0; i + 1 < p.inner.size(); ++i) {
        if (forward) {
          CHECK(d.has_arc(p.inner[i], p.inner[i + 1]));
        } else {
          CHECK(d.has_arc(p.inner[i + 1], p.inner[i]));
        }
      }
    }
  }
}
