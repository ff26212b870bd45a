#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "geodetic/generators.hpp"
#include "geodetic/io.hpp"
#include "geodetic/metric.hpp"
#include "geodetic/reduction_3dm.hpp"
#include "geodetic/solver_exact.hpp"

using namespace geodetic;

namespace {

ThreeDMInstance tiny_yes() { return {1, {{{1, 1, 1}}}}; }

VertexSet forward_witness(const ThreeDMInstance& inst,
                          const ReductionOutput& out,
                          const std::vector<std::array<int, 3>>& matching) {
  std::vector<int> elems = extremal_vertices(out.digraph).elements();
  for (std::size_t i = 0; i < matching.size(); ++i) {
    const auto it =
        std::find(inst.triples.begin(), inst.triples.end(), matching[i]);
    REQUIRE(it != inst.triples.end());
    const int edge_index = static_cast<int>(it - inst.triples.begin());
    elems.push_back(out.edge_vertex(static_cast<int>(i) + 1, edge_index));
  }
  return VertexSet(std::move(elems));
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(validate_instance({0, {}}), InvalidInstanceError);
  CHECK_THROWS_AS(validate_instance({1, {}}), InvalidInstanceError);
  CHECK_THROWS_AS(validate_instance({1, {{{1, 1, 2}}}}), InvalidInstanceError);
  CHECK_THROWS_AS(validate_instance({2, {{{1, 1, 1}}, {{1, 1, 1}}}}),
                  InvalidInstanceError);
  CHECK_NOTHROW(validate_instance({2, {{{1, 1, 1}}, {{2, 2, 2}}}}));
}

TEST_CASE("threshold and scale parameters") {
  const ReductionOutput one = reduce_3dm(tiny_yes());
  CHECK(one.k == 25);
  CHECK(one.lambda == 2);

  const ReductionOutput two =
      reduce_3dm({2, {{{1, 1, 1}}, {{2, 2, 2}}, {{1, 2, 2}}}});
  CHECK(two.k == 9 * 2 * 3 + 4 * 2 + 12);
  CHECK(two.lambda == 3);
}

TEST_CASE("extremal vertices are exactly the forced ones") {
  const ReductionOutput out = reduce_3dm(tiny_yes());
  CHECK(extremal_vertices(out.digraph).size() == 24);
  // No vertex is transitive without being extremal, so brute-force
  // pruning starts from exactly these 24.
  CHECK(mandatory_set(out.digraph).size() == 24);

  const ReductionOutput bigger =
      reduce_3dm({2, {{{1, 1, 1}}, {{2, 2, 2}}, {{1, 2, 2}}}});
  const int n = 2, m = 3;
  CHECK(extremal_vertices(bigger.digraph).size() == 9 * n * m + 3 * n + 12);
  CHECK(mandatory_set(bigger.digraph).size() == 9 * n * m + 3 * n + 12);
}

TEST_CASE("outputs are acyclic and structurally sound") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ThreeDMInstance inst =
        gen_3dm(1 + static_cast<int>(seed % 3),
                2 + static_cast<int>(seed % 4), true, seed);
    const ReductionOutput out = reduce_3dm(inst);
    const ReductionReport report = verify_reduction(inst, out, false);
    CHECK(report.dag_ok);
    CHECK(report.fvn_witness_ok);
    CHECK(report.extremal_count_ok);
    CHECK(report.path_lengths_ok);
    CHECK(report.alignment_ok);
    CHECK(report.vertex_count == out.digraph.vertex_count());
  }
}

TEST_CASE("matching oracle on fixed instances") {
  CHECK(solve_3dm_exact(tiny_yes()).has_value());
  CHECK_FALSE(solve_3dm_exact({1, {}}).has_value());

  const ThreeDMInstance forced = {
      2, {{{1, 1, 1}}, {{2, 2, 2}}, {{1, 2, 2}}}};
  const auto matching = solve_3dm_exact(forced);
  REQUIRE(matching.has_value());
  CHECK(matching->size() == 2);
  CHECK((*matching)[0] == std::array<int, 3>{1, 1, 1});
  CHECK((*matching)[1] == std::array<int, 3>{2, 2, 2});

  CHECK_FALSE(solve_3dm_exact({2, {{{1, 1, 1}}, {{1, 2, 2}}}}).has_value());
}

TEST_CASE("matching witnesses induce geodetic sets of size k") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 1 + static_cast<int>(seed % 2);
    const ThreeDMInstance inst = gen_3dm(n, n + 1, true, seed);
    const ReductionOutput out = reduce_3dm(inst);
    const auto matching = solve_3dm_exact(inst);
    REQUIRE(matching.has_value());
    const VertexSet witness = forward_witness(inst, out, *matching);
    CHECK(witness.size() == out.k);
    CHECK(is_geodetic(out.digraph, witness));
  }
}

TEST_CASE("capped search certifies the threshold on a yes-instance") {
  const ThreeDMInstance inst = tiny_yes();
  const ReductionOutput out = reduce_3dm(inst);
  const ReductionReport report = verify_reduction(inst, out, true);
  REQUIRE(report.equivalence_ok.has_value());
  CHECK(*report.equivalence_ok);
  REQUIRE(report.geodetic_number.has_value());
  CHECK(*report.geodetic_number == 25);
}

TEST_CASE("capped search rejects the threshold on a no-instance") {
  const ThreeDMInstance inst = {2, {{{1, 1, 1}}, {{1, 2, 2}}}};
  const ReductionOutput out = reduce_3dm(inst);
  CHECK_FALSE(solve_3dm_exact(inst).has_value());
  const SolveResult at_k = solve_exact(out.digraph, out.k);
  CHECK(at_k.cap_exceeded);
}

TEST_CASE("tampered outputs are detected") {
  const ThreeDMInstance inst = tiny_yes();
  ReductionOutput out = reduce_3dm(inst);
  std::vector<Arc> arcs = out.digraph.arcs();
  // Drop an arc from inside a long path.
  const auto it = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) {
    return a.tail >= out.delta_pendant(2, 3) + 1 &&
           a.head == a.tail + 1;
  });
  REQUIRE(it != arcs.end());
  arcs.erase(it);
  out.digraph = Digraph(out.digraph.vertex_count(), std::move(arcs));
  CHECK_THROWS_AS(verify_reduction(inst, out, false), StructuralMismatchError);
}

TEST_CASE("construction is deterministic") {
  const ThreeDMInstance inst = gen_3dm(2, 4, true, 11);
  const ReductionOutput a = reduce_3dm(inst);
  const ReductionOutput b = reduce_3dm(inst);
  CHECK(serialize_digraph(a.digraph) == serialize_digraph(b.digraph));
  CHECK(a.labels == b.labels);
  CHECK(a.k == b.k);
}

TEST_CASE("labels cover every vertex with the expected roles") {
  const ReductionOutput out = reduce_3dm(tiny_yes());
  CHECK(static_cast<int>(out.labels.size()) == out.digraph.vertex_count());
  CHECK(out.labels[out.a_vertex()] == "a");
  CHECK(out.labels[out.b_vertex()] == "b");
  CHECK(out.labels[out.c_vertex()] == "c");
  CHECK(out.labels[out.edge_vertex(1, 0)] == "edge_vertex(1,0)");
  CHECK(out.labels[out.d_vertex(1)] == "d(1)");
  CHECK(out.labels[out.element_v(0, 1)] == "element_v(alpha,1)");
  CHECK(out.labels[out.delta_vertex(2, 3)] == "delta(gamma,3)");
  CHECK(out.labels[out.delta_pendant(0, 1)] == "delta_pendant(alpha,1)");
}
