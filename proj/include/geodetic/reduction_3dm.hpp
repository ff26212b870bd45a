#ifndef GEODETIC_REDUCTION_3DM_HPP
#define GEODETIC_REDUCTION_3DM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geodetic/digraph.hpp"
#include "geodetic/solve_result.hpp"

namespace geodetic {

// Tripartite matching instance: three parts of n elements each, indexed
// 1..n, and a collection of distinct triples (one index per part).
struct ThreeDMInstance {
  int n = 0;
  std::vector<std::array<int, 3>> triples;
};

// Throws InvalidInstance on out-of-range indices or duplicate triples.
void validate_instance(const ThreeDMInstance& inst);

struct ReductionPath {
  int from = 0;
  int to = 0;
  int length = 0;  // number of arcs; length - 1 fresh internal vertices
};

// The DAG produced from a matching instance, with k = 9nm + 4n + 12 the
// geodetic-number threshold that carries the instance's answer. Every
// vertex gets a role label; id blocks follow construction order so equal
// instances serialize identically.
struct ReductionOutput {
  Digraph digraph{0, std::vector<Arc>{}};
  int k = 0;
  int lambda = 0;
  std::vector<std::string> labels;
  std::vector<ReductionPath> paths;     // every multi-arc path, with its length
  std::vector<int> fvn_witness;         // 12 vertices whose removal leaves a forest

  // id lookup (part: 0 = alpha, 1 = beta, 2 = gamma)
  int edge_vertex(int row, int edge_index) const;   // u_row^e, row in 1..n
  int d_vertex(int row) const;
  int a_vertex() const;
  int b_vertex() const;
  int c_vertex() const;
  int element_v(int part, int l) const;
  int element_w(int part, int l) const;
  int element_t(int part, int l) const;
  int delta_vertex(int part, int idx) const;        // idx in 1..3
  int delta_pendant(int part, int idx) const;

  int n = 0;
  int m = 0;
};

ReductionOutput reduce_3dm(const ThreeDMInstance& inst);

// Exhaustive matching search: n-subsets of the triples in lexicographic
// index order; the first subset covering every element wins.
std::optional<std::vector<std::array<int, 3>>> solve_3dm_exact(
    const ThreeDMInstance& inst);

struct ReductionReport {
  int vertex_count = 0;
  int arc_count = 0;
  int extremal_count = 0;
  bool dag_ok = false;
  bool fvn_witness_ok = false;
  bool extremal_count_ok = false;
  bool path_lengths_ok = false;
  bool alignment_ok = false;
  std::optional<bool> equivalence_ok;  // set when the capped search ran
  std::optional<int> geodetic_number;
};

// Checks the structural guarantees of the construction and throws
// StructuralMismatch at the first failure. With check_equivalence, also
// cross-checks the matching oracle against a capped exact search on the
// output (feasible only for small instances).
ReductionReport verify_reduction(const ThreeDMInstance& inst,
                                 const ReductionOutput& out,
                                 bool check_equivalence);

// Convenience overload: runs the equivalence check iff the digraph has at
// most 1000 vertices.
ReductionReport verify_reduction(const ThreeDMInstance& inst,
                                 const ReductionOutput& out);

}  // namespace geodetic

#endif
