#ifndef GEODETIC_DECOMPOSITION_HPP
#define GEODETIC_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "geodetic/digraph.hpp"

namespace geodetic {

// Core-path classification by the number of orientation breaks among the
// inner vertices. A break is an inner vertex whose two path edges both
// point into it or both out of it; such a vertex is either extremal or a
// hanging-tree root whose coverage flows through the attached tree, and
// in both cases it contributes no enumeration candidate itself. On paths
// whose inner vertices carry no hanging trees, breaks are exactly the
// extremal inner vertices.
enum class PathClass { dipath, one_extremal, two_extremals, many_extremals };

const char* path_class_name(PathClass c);

struct CorePath {
  int endpoint_a = -1;  // core vertices; equal for a core cycle
  int endpoint_b = -1;
  std::vector<int> inner;               // ordered from endpoint_a to endpoint_b
  std::vector<int> inner_extremals;     // indices into inner
  std::vector<int> orientation_breaks;  // indices into inner
  PathClass cls = PathClass::dipath;
  std::vector<int> candidates;  // at most two vertex ids
};

struct HangingTree {
  std::optional<int> root;   // base vertex; empty for a whole tree component
  std::vector<int> members;  // ascending; excludes the root
};

// Structural decomposition of the underlying graph: the base graph left
// by iterated leaf removal, its core vertices (base degree >= 3), the
// core paths between them, the peeled-off hanging trees, and the cycle
// components of the base that carry no core vertex at all. fen of a
// component is (simple edges) - (vertices) + 1.
struct Decomposition {
  std::vector<int> base_vertices;  // ascending
  std::vector<int> core_vertices;  // ascending
  std::vector<CorePath> core_paths;
  std::vector<HangingTree> hanging_trees;
  std::vector<std::vector<int>> bare_cycle_components;
  std::vector<int> fen_per_component;
  int fen_total = 0;
};

Decomposition decompose(const Digraph& d);

// The enumeration pool for the fen solver: all core vertices plus the
// per-path candidates. Defined for oriented graphs only. When every base
// component has a core vertex and fen >= 2, the result has at most
// 8*fen - 8 members.
VertexSet extract_candidates(const Digraph& d, const Decomposition& dec);

}  // namespace geodetic

#endif
