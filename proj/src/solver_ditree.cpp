#include "geodetic/solver_ditree.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "geodetic/rng.hpp"

namespace geodetic {

namespace {

void require_tree(const Digraph& t) {
  if (t.vertex_count() == 0) throw NotATreeError("empty graph");
  const UndirectedGraph g = underlying_graph(t);
  if (static_cast<int>(g.edges.size()) != g.n - 1) {
    throw NotATreeError("edge count " + std::to_string(g.edges.size()) +
                        " != " + std::to_string(g.n - 1));
  }
  if (static_cast<int>(underlying_components(t).size()) != 1) {
    throw NotATreeError("disconnected");
  }
}

std::vector<std::vector<int>> tree_adjacency(const UndirectedGraph& g) {
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(g.n));
  for (const auto& [u, v] : g.edges) {
    nbrs[static_cast<std::size_t>(u)].push_back(v);
    nbrs[static_cast<std::size_t>(v)].push_back(u);
  }
  return nbrs;
}

struct RootedTree {
  std::vector<int> order;   // BFS order from vertex 0
  std::vector<int> parent;  // -1 at the root
};

RootedTree root_tree(const std::vector<std::vector<int>>& nbrs) {
  const int n = static_cast<int>(nbrs.size());
  RootedTree rt;
  rt.parent.assign(static_cast<std::size_t>(n), -2);
  rt.order.reserve(static_cast<std::size_t>(n));
  rt.order.push_back(0);
  rt.parent[0] = -1;
  for (std::size_t i = 0; i < rt.order.size(); ++i) {
    const int v = rt.order[i];
    for (int w : nbrs[static_cast<std::size_t>(v)]) {
      if (rt.parent[static_cast<std::size_t>(w)] == -2) {
        rt.parent[static_cast<std::size_t>(w)] = v;
        rt.order.push_back(w);
      }
    }
  }
  return rt;
}

// reach[x] for the tree edge x -> parent(x), reach_down[x] for
// parent(x) -> x: whether some member of s has a directed path (possibly
// empty) to the edge's tail that stays on the tail's side of the edge,
// followed by the arc across it.
struct EdgeReach {
  std::vector<std::uint8_t> up, down;
};

EdgeReach edge_reachability(const Digraph& d,
                            const std::vector<std::vector<int>>& nbrs,
                            const RootedTree& rt,
                            const std::vector<std::uint8_t>& in_s) {
  const auto n = nbrs.size();
  EdgeReach r;
  r.up.assign(n, 0);
  r.down.assign(n, 0);
  std::vector<int> child_hits(n, 0);  // children c with r.up[c]

  for (std::size_t i = rt.order.size(); i-- > 0;) {
    const int v = rt.order[i];
    const int p = rt.parent[static_cast<std::size_t>(v)];
    if (p < 0) continue;
    if (d.has_arc(v, p) &&
        (in_s[static_cast<std::size_t>(v)] ||
         child_hits[static_cast<std::size_t>(v)] > 0)) {
      r.up[static_cast<std::size_t>(v)] = 1;
      ++child_hits[static_cast<std::size_t>(p)];
    }
  }
  for (const int v : rt.order) {
    const int p = rt.parent[static_cast<std::size_t>(v)];
    if (p < 0) continue;
    if (!d.has_arc(p, v)) continue;
    const bool from_elsewhere =
        in_s[static_cast<std::size_t>(p)] ||
        child_hits[static_cast<std::size_t>(p)] -
                (r.up[static_cast<std::size_t>(v)] ? 1 : 0) >
            0 ||
        r.down[static_cast<std::size_t>(p)];
    if (from_elsewhere) r.down[static_cast<std::size_t>(v)] = 1;
  }
  return r;
}

}  // namespace

bool ditree_is_geodetic(const Digraph& t, const VertexSet& s) {
  require_tree(t);
  const int n = t.vertex_count();
  std::vector<std::uint8_t> in_s(static_cast<std::size_t>(n), 0);
  for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;

  const auto nbrs = tree_adjacency(underlying_graph(t));
  const RootedTree rt = root_tree(nbrs);
  const EdgeReach into = edge_reachability(t, nbrs, rt, in_s);
  const EdgeReach outof = edge_reachability(t.reversed(), nbrs, rt, in_s);

  for (int w = 0; w < n; ++w) {
    const auto wi = static_cast<std::size_t>(w);
    if (in_s[wi]) continue;
    int cnt_in = 0, cnt_out = 0, via_in = -1, via_out = -1;
    for (int x : nbrs[wi]) {
      const auto xi = static_cast<std::size_t>(x);
      const bool x_is_parent = rt.parent[wi] == x;
      if (x_is_parent ? into.down[wi] : into.up[xi]) {
        ++cnt_in;
        via_in = x;
      }
      if (x_is_parent ? outof.down[wi] : outof.up[xi]) {
        ++cnt_out;
        via_out = x;
      }
    }
    // A covering path must enter and leave w through distinct neighbors.
    const bool covered =
        cnt_in >= 1 && cnt_out >= 1 &&
        (cnt_in >= 2 || cnt_out >= 2 || via_in != via_out);
    if (!covered) return false;
  }
  return true;
}

SolveResult solve_ditree(const Digraph& t) {
  const auto start = std::chrono::steady_clock::now();
  require_tree(t);
  SolveResult result;
  result.algorithm = Algorithm::ditree;

  const int n = t.vertex_count();
  std::vector<int> witness;
  if (n == 1) {
    witness.push_back(0);
  } else {
    const std::vector<int> deg = underlying_degrees(t);
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<std::size_t>(v)] == 1) witness.push_back(v);
    }
    const SccPartition scc = strongly_connected_components(t);
    for (int c = 0; c < scc.count(); ++c) {
      const auto ci = static_cast<std::size_t>(c);
      if (scc.contains_leaf[ci]) continue;
      if (scc.is_source_set[ci] || scc.is_sink_set[ci]) {
        witness.push_back(scc.members[ci].front());
      }
    }
  }
  result.witness = VertexSet(std::move(witness));
  result.size = result.witness.size();
  result.verified = ditree_is_geodetic(t, result.witness);
  result.stats.cover_checks = 1;
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

ContractedDitree contract_ditree(const Digraph& t,
                                 std::uint64_t contraction_order_seed) {
  require_tree(t);
  const int n = t.vertex_count();
  const UndirectedGraph g = underlying_graph(t);

  std::vector<int> dsu(static_cast<std::size_t>(n));
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](int v) {
    while (dsu[static_cast<std::size_t>(v)] != v) {
      dsu[static_cast<std::size_t>(v)] =
          dsu[static_cast<std::size_t>(dsu[static_cast<std::size_t>(v)])];
      v = dsu[static_cast<std::size_t>(v)];
    }
    return v;
  };

  std::vector<std::pair<int, int>> two_cycles;
  for (const auto& [u, v] : g.edges) {
    if (t.in_two_cycle(u, v)) two_cycles.emplace_back(u, v);
  }
  if (contraction_order_seed != 0) {
    SplitMix64 rng(contraction_order_seed);
    for (std::size_t i = two_cycles.size(); i > 1; --i) {
      std::swap(two_cycles[i - 1], two_cycles[rng.next_below(i)]);
    }
  }

  // One contraction per round, recomputing leaf status of the quotient.
  while (true) {
    std::vector<int> qdeg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges) {
      const int cu = find(u), cv = find(v);
      if (cu != cv) {
        ++qdeg[static_cast<std::size_t>(cu)];
        ++qdeg[static_cast<std::size_t>(cv)];
      }
    }
    bool contracted = false;
    for (const auto& [u, v] : two_cycles) {
      const int cu = find(u), cv = find(v);
      if (cu == cv) continue;
      if (qdeg[static_cast<std::size_t>(cu)] == 1 ||
          qdeg[static_cast<std::size_t>(cv)] == 1) {
        continue;
      }
      dsu[static_cast<std::size_t>(std::max(cu, cv))] = std::min(cu, cv);
      contracted = true;
      break;
    }
    if (!contracted) break;
  }

  // Label classes by smallest member, in ascending order.
  std::vector<int> class_id(static_cast<std::size_t>(n), -1);
  int next_id = 0;
  for (int v = 0; v < n; ++v) {
    const int root = find(v);
    if (class_id[static_cast<std::size_t>(root)] == -1) {
      class_id[static_cast<std::size_t>(root)] = next_id++;
    }
  }
  std::vector<int> vertex_map(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    vertex_map[static_cast<std::size_t>(v)] =
        class_id[static_cast<std::size_t>(find(v))];
  }

  std::vector<Arc> arcs;
  for (const Arc& a : t.arcs()) {
    const int cu = vertex_map[static_cast<std::size_t>(a.tail)];
    const int cv = vertex_map[static_cast<std::size_t>(a.head)];
    if (cu != cv) arcs.push_back({cu, cv});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
  });
  return ContractedDitree{Digraph(next_id, std::move(arcs)),
                          std::move(vertex_map)};
}

}  // namespace geodetic
