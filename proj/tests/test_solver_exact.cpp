#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geodetic/generators.hpp"
#include "geodetic/metric.hpp"
#include "geodetic/rng.hpp"
#include "geodetic/solver_exact.hpp"
#include "test_support.hpp"

using namespace geodetic;
using testing::path3;
using testing::sample_ditree;
using testing::theta_graph;
using testing::two_cycle;

namespace {

// Unpruned reference: scan all vertex subsets in size-then-lex order.
// Deliberately independent of mandatory_set and the search engine.
struct BruteForce {
  int min_size = -1;
  std::vector<VertexSet> minimum_sets;
};

BruteForce enumerate_all(const Digraph& d) {
  const int n = d.vertex_count();
  BruteForce out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (out.min_size != -1 &&
        static_cast<int>(__builtin_popcount(mask)) > out.min_size) {
      continue;
    }
    std::vector<int> elems;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) elems.push_back(v);
    }
    VertexSet s(std::move(elems));
    if (!is_geodetic(d, s)) continue;
    if (out.min_size == -1 || s.size() < out.min_size) {
      out.min_size = s.size();
      out.minimum_sets.clear();
    }
    if (s.size() == out.min_size) out.minimum_sets.push_back(std::move(s));
  }
  return out;
}

Digraph small_random(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = 3 + rng.next_int_below(6);
  if (rng.next_bool()) return gen_ditree(n, 0.35, rng.next());
  return gen_oriented_fen(n, rng.next_int_below(3), rng.next());
}

}  // namespace

TEST_CASE("mandatory set on small graphs") {
  CHECK(mandatory_set(path3()) == VertexSet{0, 2});
  CHECK(mandatory_set(two_cycle()) == VertexSet{0, 1});
}

TEST_CASE("solve_exact on the path digraph") {
  const SolveResult r = solve_exact(path3());
  CHECK(r.size == 2);
  CHECK(r.witness == VertexSet{0, 2});
  CHECK(r.verified);
}

TEST_CASE("solve_exact on the sample ditree") {
  const SolveResult r = solve_exact(sample_ditree());
  CHECK(r.size == 5);
  CHECK(r.witness == VertexSet{4, 9, 10, 11, 12});
  CHECK(r.verified);
}

TEST_CASE("solve_exact on the theta graph") {
  const SolveResult r = solve_exact(theta_graph());
  CHECK(r.size == 4);
  CHECK(r.verified);
}

TEST_CASE("size caps report instead of searching on") {
  const SolveResult capped = solve_exact(path3(), 1);
  CHECK(capped.cap_exceeded);
  CHECK_FALSE(capped.found());

  const SolveResult fits = solve_exact(path3(), 2);
  CHECK(fits.found());
  CHECK(fits.size == 2);

  // Cap below the mandatory set size proves infeasibility immediately.
  const SolveResult below = solve_exact(sample_ditree(), 3);
  CHECK(below.cap_exceeded);
}

TEST_CASE("every geodetic set contains the mandatory set") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Digraph d = small_random(seed);
    const VertexSet mandatory = mandatory_set(d);
    const BruteForce ref = enumerate_all(d);
    REQUIRE(ref.min_size >= 0);
    for (const VertexSet& s : ref.minimum_sets) {
      CHECK(mandatory.is_subset_of(s));
    }
    const SolveResult r = solve_exact(d);
    CHECK(r.size == ref.min_size);
    CHECK(r.verified);
  }
}

TEST_CASE("witnesses are minimal under single removals") {
  for (std::uint64_t seed = 30; seed <= 45; ++seed) {
    const Digraph d = small_random(seed);
    const SolveResult r = solve_exact(d);
    for (int v : r.witness) {
      std::vector<int> rest;
      for (int w : r.witness) {
        if (w != v) rest.push_back(w);
      }
      CHECK_FALSE(is_geodetic(d, VertexSet(rest)));
    }
  }
}

TEST_CASE("deterministic witnesses, independent of thread count") {
  for (std::uint64_t seed = 50; seed <= 60; ++seed) {
    const Digraph d = small_random(seed);
    const SolveResult a = solve_exact(d);
    const SolveResult b = solve_exact(d);
    const SolveResult c = solve_exact(d, std::nullopt, SolveOptions{4});
    CHECK(a.witness == b.witness);
    CHECK(a.witness == c.witness);
  }
}
