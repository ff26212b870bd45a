#ifndef GEODETIC_DIGRAPH_HPP
#define GEODETIC_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geodetic/errors.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable directed graph on vertices 0..n-1. Construction rejects
// self-loops and duplicate arcs; a 2-cycle is the pair of arcs (u,v) and
// (v,u), each of which is unique. Adjacency is stored in CSR form with
// neighbor lists in ascending order, so every traversal is deterministic.
class Digraph {
 public:
  Digraph(int n, std::vector<Arc> arcs);
  Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const int> out_neighbors(int v) const {
    return {out_adj_.data() + out_off_[static_cast<std::size_t>(v)],
            out_adj_.data() + out_off_[static_cast<std::size_t>(v) + 1]};
  }
  std::span<const int> in_neighbors(int v) const {
    return {in_adj_.data() + in_off_[static_cast<std::size_t>(v)],
            in_adj_.data() + in_off_[static_cast<std::size_t>(v) + 1]};
  }
  int out_degree(int v) const {
    return static_cast<int>(out_neighbors(v).size());
  }
  int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

  bool has_arc(int tail, int head) const;
  bool in_two_cycle(int u, int v) const {
    return has_arc(u, v) && has_arc(v, u);
  }
  // First 2-cycle in arc order, if any.
  std::optional<std::pair<int, int>> find_two_cycle() const;

  Digraph reversed() const;

  // Graphs are equal when they have the same vertex count and the same
  // arc set; the stored arc order is irrelevant.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arc_keys_ == b.arc_keys_;
  }

 private:
  void check_and_index();

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_off_, out_adj_, in_off_, in_adj_;
  std::vector<std::uint64_t> arc_keys_;  // sorted (tail << 32 | head)
};

Digraph build_digraph(int n, const std::vector<std::pair<int, int>>& arcs);

// Per-vertex structural flags. A vertex is transitive when every
// (in-neighbor u1, out-neighbor u2) pair either coincides or is bridged
// by the arc u1->u2; sources and sinks satisfy this vacuously. Leaves are
// vertices of degree 1 in the underlying simple graph.
struct VertexClassification {
  std::vector<std::uint8_t> is_source, is_sink, is_extremal, is_transitive,
      is_leaf, has_two_cycle_incident;
};

VertexClassification classify_vertices(const Digraph& d);

// Sources and sinks only; avoids the transitivity scan.
VertexSet extremal_vertices(const Digraph& d);

// Degree in the underlying simple graph (a 2-cycle counts as one edge).
std::vector<int> underlying_degrees(const Digraph& d);

struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, ascending, unique
};

UndirectedGraph underlying_graph(const Digraph& d);

// Connected components of the underlying graph, listed by smallest member.
std::vector<std::vector<int>> underlying_components(const Digraph& d);

// Maximal strongly connected components. A component is a source set when
// no arc enters it from outside and a sink set when no arc leaves it.
// Components are renumbered so that ids ascend with their smallest member.
struct SccPartition {
  std::vector<int> component_of;
  std::vector<std::vector<int>> members;  // ascending within a component
  std::vector<std::uint8_t> is_source_set, is_sink_set, contains_leaf;
  int count() const { return static_cast<int>(members.size()); }
};

SccPartition strongly_connected_components(const Digraph& d);

// Induced subgraph on `vertices` (ascending); arcs keep their relative
// order. Entry i of `vertices` becomes vertex i of the subgraph.
Digraph induced_subgraph(const Digraph& d, const std::vector<int>& vertices);

bool is_underlying_tree(const Digraph& d);

}  // namespace geodetic

#endif
