#include "geodetic/reduction_3dm.hpp"

#include <algorithm>
#include <set>

#include "geodetic/metric.hpp"
#include "geodetic/solver_exact.hpp"

namespace geodetic {

namespace {

const char* kPartNames[3] = {"alpha", "beta", "gamma"};

}  // namespace

void validate_instance(const ThreeDMInstance& inst) {
  if (inst.n < 1) {
    throw InvalidInstanceError("n must be at least 1");
  }
  if (inst.triples.empty()) {
    throw InvalidInstanceError("at least one triple required");
  }
  std::set<std::array<int, 3>> seen;
  for (const auto& t : inst.triples) {
    for (int part = 0; part < 3; ++part) {
      if (t[static_cast<std::size_t>(part)] < 1 ||
          t[static_cast<std::size_t>(part)] > inst.n) {
        throw InvalidInstanceError(
            "triple index " + std::to_string(t[static_cast<std::size_t>(part)]) +
            " outside 1.." + std::to_string(inst.n));
      }
    }
    if (!seen.insert(t).second) {
      throw InvalidInstanceError("duplicate triple (" + std::to_string(t[0]) +
                                 "," + std::to_string(t[1]) + "," +
                                 std::to_string(t[2]) + ")");
    }
  }
}

int ReductionOutput::edge_vertex(int row, int edge_index) const {
  return (row - 1) * m + edge_index;
}
int ReductionOutput::d_vertex(int row) const { return n * m + (row - 1); }
int ReductionOutput::a_vertex() const { return n * m + n; }
int ReductionOutput::b_vertex() const { return n * m + n + 1; }
int ReductionOutput::c_vertex() const { return n * m + n + 2; }
int ReductionOutput::element_v(int part, int l) const {
  return n * m + n + 3 + (part * n + (l - 1)) * 3;
}
int ReductionOutput::element_w(int part, int l) const {
  return element_v(part, l) + 1;
}
int ReductionOutput::element_t(int part, int l) const {
  return element_v(part, l) + 2;
}
int ReductionOutput::delta_vertex(int part, int idx) const {
  return n * m + n + 3 + 9 * n + part * 3 + (idx - 1);
}
int ReductionOutput::delta_pendant(int part, int idx) const {
  return delta_vertex(part, idx) + 9;
}

ReductionOutput reduce_3dm(const ThreeDMInstance& inst) {
  validate_instance(inst);
  const int n = inst.n;
  const int m = static_cast<int>(inst.triples.size());
  const int lambda = n + 1;

  ReductionOutput out;
  out.n = n;
  out.m = m;
  out.lambda = lambda;
  out.k = 9 * n * m + 4 * n + 12;

  std::vector<Arc> arcs;
  std::vector<std::string>& labels = out.labels;

  // Fixed id blocks: edge vertices, d vertices, a/b/c, element triples,
  // junction (delta) vertices, their pendants; then path internals, the
  // per-path pendants, and the junction-to-element paths.
  for (int row = 1; row <= n; ++row) {
    for (int e = 0; e < m; ++e) {
      labels.push_back("edge_vertex(" + std::to_string(row) + "," +
                       std::to_string(e) + ")");
    }
  }
  for (int row = 1; row <= n; ++row) {
    labels.push_back("d(" + std::to_string(row) + ")");
  }
  labels.emplace_back("a");
  labels.emplace_back("b");
  labels.emplace_back("c");
  for (int part = 0; part < 3; ++part) {
    for (int l = 1; l <= n; ++l) {
      const std::string suffix =
          std::string(kPartNames[part]) + "," + std::to_string(l) + ")";
      labels.push_back("element_v(" + suffix);
      labels.push_back("element_w(" + suffix);
      labels.push_back("element_t(" + suffix);
    }
  }
  for (int part = 0; part < 3; ++part) {
    for (int idx = 1; idx <= 3; ++idx) {
      labels.push_back("delta(" + std::string(kPartNames[part]) + "," +
                       std::to_string(idx) + ")");
    }
  }
  for (int part = 0; part < 3; ++part) {
    for (int idx = 1; idx <= 3; ++idx) {
      labels.push_back("delta_pendant(" + std::string(kPartNames[part]) + "," +
                       std::to_string(idx) + ")");
    }
  }

  const int a = out.a_vertex();
  const int b = out.b_vertex();
  const int c = out.c_vertex();

  for (int row = 1; row <= n; ++row) {
    for (int e = 0; e < m; ++e) {
      const int u = out.edge_vertex(row, e);
      arcs.push_back({a, u});
      arcs.push_back({u, b});
      arcs.push_back({u, out.d_vertex(row)});
    }
    arcs.push_back({out.d_vertex(row), c});
  }
  arcs.push_back({a, c});

  for (int part = 0; part < 3; ++part) {
    for (int l = 1; l <= n; ++l) {
      arcs.push_back({out.element_w(part, l), out.element_v(part, l)});
      arcs.push_back({out.element_t(part, l), out.element_v(part, l)});
      arcs.push_back({a, out.element_v(part, l)});
    }
  }
  for (int part = 0; part < 3; ++part) {
    for (int idx = 1; idx <= 3; ++idx) {
      arcs.push_back({out.delta_vertex(part, idx), out.delta_pendant(part, idx)});
    }
  }

  int next_id = static_cast<int>(labels.size());

  // A path of length L contributes L-1 fresh internal vertices; L >= 2
  // always holds here since the shortest table entry is
  // lambda^2 - n*lambda = lambda.
  auto add_path = [&](int from, int to, int length, const std::string& tag) {
    int prev = from;
    for (int step = 1; step < length; ++step) {
      labels.push_back(tag + "[" + std::to_string(step) + "]");
      arcs.push_back({prev, next_id});
      prev = next_id++;
    }
    arcs.push_back({prev, to});
    out.paths.push_back({from, to, length});
    return prev;  // the vertex right before `to`
  };

  // Adjacency encoding: every copy of an edge vertex gets nine paths, one
  // per junction vertex, plus a pendant on each path's last internal
  // vertex so the path is forced into the closure of any geodetic set.
  std::vector<int> before_delta;  // per (row, e, part, idx), construction order
  for (int row = 1; row <= n; ++row) {
    for (int e = 0; e < m; ++e) {
      const int u = out.edge_vertex(row, e);
      for (int part = 0; part < 3; ++part) {
        const int comp = inst.triples[static_cast<std::size_t>(e)]
                                     [static_cast<std::size_t>(part)];
        for (int idx = 1; idx <= 3; ++idx) {
          const int length = lambda * lambda + (idx - 2) * comp * lambda;
          const std::string tag = "edge_path_internal(" + std::to_string(row) +
                                  "," + std::to_string(e) + "," +
                                  kPartNames[part] + "," + std::to_string(idx) +
                                  ")";
          before_delta.push_back(
              add_path(u, out.delta_vertex(part, idx), length, tag));
        }
      }
    }
  }
  {
    std::size_t pos = 0;
    for (int row = 1; row <= n; ++row) {
      for (int e = 0; e < m; ++e) {
        for (int part = 0; part < 3; ++part) {
          for (int idx = 1; idx <= 3; ++idx) {
            labels.push_back("edge_path_pendant(" + std::to_string(row) + "," +
                             std::to_string(e) + "," + kPartNames[part] + "," +
                             std::to_string(idx) + ")");
            arcs.push_back({before_delta[pos++], next_id++});
          }
        }
      }
    }
  }

  for (int part = 0; part < 3; ++part) {
    for (int l = 1; l <= n; ++l) {
      const std::string base = std::string("adj_path_internal(") +
                               kPartNames[part] + "," + std::to_string(l);
      add_path(out.delta_vertex(part, 1), out.element_w(part, l),
               lambda * lambda + l * lambda, base + ",1w)");
      add_path(out.delta_vertex(part, 2), out.element_w(part, l),
               lambda * lambda, base + ",2w)");
      add_path(out.delta_vertex(part, 2), out.element_t(part, l),
               lambda * lambda, base + ",2t)");
      add_path(out.delta_vertex(part, 3), out.element_w(part, l),
               lambda * lambda - l * lambda, base + ",3w)");
    }
  }

  out.digraph = Digraph(next_id, std::move(arcs));

  out.fvn_witness = {a, b, c};
  for (int part = 0; part < 3; ++part) {
    for (int idx = 1; idx <= 3; ++idx) {
      out.fvn_witness.push_back(out.delta_vertex(part, idx));
    }
  }
  std::sort(out.fvn_witness.begin(), out.fvn_witness.end());
  return out;
}

std::optional<std::vector<std::array<int, 3>>> solve_3dm_exact(
    const ThreeDMInstance& inst) {
  const int n = inst.n;
  const int m = static_cast<int>(inst.triples.size());
  if (m < n) return std::nullopt;

  std::vector<int> combo(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) combo[static_cast<std::size_t>(i)] = i;
  while (true) {
    bool ok = true;
    std::vector<std::uint8_t> used(static_cast<std::size_t>(3 * n), 0);
    for (int i = 0; i < n && ok; ++i) {
      const auto& t = inst.triples[static_cast<std::size_t>(
          combo[static_cast<std::size_t>(i)])];
      for (int part = 0; part < 3; ++part) {
        auto& flag = used[static_cast<std::size_t>(
            part * n + t[static_cast<std::size_t>(part)] - 1)];
        if (flag) {
          ok = false;
          break;
        }
        flag = 1;
      }
    }
    if (ok) {
      std::vector<std::array<int, 3>> matching;
      for (int i : combo) {
        matching.push_back(inst.triples[static_cast<std::size_t>(i)]);
      }
      return matching;
    }
    // lexicographic successor
    int i = n;
    bool advanced = false;
    while (i-- > 0) {
      if (combo[static_cast<std::size_t>(i)] + (n - i) < m) {
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
          combo[static_cast<std::size_t>(j)] =
              combo[static_cast<std::size_t>(j - 1)] + 1;
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
}

namespace {

bool is_dag(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Arc& a : d.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  }
  std::size_t taken = 0;
  while (taken < queue.size()) {
    const int v = queue[taken++];
    for (int w : d.out_neighbors(v)) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
  }
  return taken == static_cast<std::size_t>(n);
}

bool leaves_forest(const Digraph& d, const std::vector<int>& removed) {
  const int n = d.vertex_count();
  std::vector<std::uint8_t> gone(static_cast<std::size_t>(n), 0);
  for (int v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<int> dsu(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dsu[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (dsu[static_cast<std::size_t>(v)] != v) {
      dsu[static_cast<std::size_t>(v)] =
          dsu[static_cast<std::size_t>(dsu[static_cast<std::size_t>(v)])];
      v = dsu[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& [u, v] : underlying_graph(d).edges) {
    if (gone[static_cast<std::size_t>(u)] || gone[static_cast<std::size_t>(v)]) {
      continue;
    }
    const int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    dsu[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

}  // namespace

ReductionReport verify_reduction(const ThreeDMInstance& inst,
                                 const ReductionOutput& out,
                                 bool check_equivalence) {
  validate_instance(inst);
  ReductionReport report;
  const Digraph& d = out.digraph;
  report.vertex_count = d.vertex_count();
  report.arc_count = d.arc_count();
  const int n = inst.n;
  const int m = static_cast<int>(inst.triples.size());
  const int lambda = n + 1;

  report.dag_ok = is_dag(d);
  if (!report.dag_ok) throw StructuralMismatchError("digraph is not acyclic");

  report.fvn_witness_ok = out.fvn_witness.size() == 12 &&
                          leaves_forest(d, out.fvn_witness);
  if (!report.fvn_witness_ok) {
    throw StructuralMismatchError(
        "removing the 12 witness vertices leaves a cycle");
  }

  report.extremal_count = extremal_vertices(d).size();
  report.extremal_count_ok = report.extremal_count == 9 * n * m + 3 * n + 12;
  if (!report.extremal_count_ok) {
    throw StructuralMismatchError(
        "extremal count " + std::to_string(report.extremal_count) + " != " +
        std::to_string(9 * n * m + 3 * n + 12));
  }

  // Every recorded path must realize its table length as the exact hop
  // distance between its endpoints.
  report.path_lengths_ok = true;
  for (const ReductionPath& p : out.paths) {
    const DistanceField field = bfs_distances(d, p.from, Direction::forward);
    if (!field.reachable(p.to) || field.hops(p.to) != p.length) {
      report.path_lengths_ok = false;
      throw StructuralMismatchError(
          "path " + std::to_string(p.from) + "->" + std::to_string(p.to) +
          " has distance " +
          (field.reachable(p.to) ? std::to_string(field.hops(p.to)) : "inf") +
          ", expected " + std::to_string(p.length));
    }
  }

  // Each copy of an edge (i, j, k) sits at hop distance exactly
  // 2*lambda^2 from the w-vertices of its three elements, through all
  // three junction routes, and from every t-vertex of its parts.
  report.alignment_ok = true;
  const int two_lambda_sq = 2 * lambda * lambda;
  for (int row = 1; row <= n && report.alignment_ok; ++row) {
    for (int e = 0; e < m && report.alignment_ok; ++e) {
      const int u = out.edge_vertex(row, e);
      const DistanceField field = bfs_distances(d, u, Direction::forward);
      for (int part = 0; part < 3; ++part) {
        const int elem = inst.triples[static_cast<std::size_t>(e)]
                                     [static_cast<std::size_t>(part)];
        const int w = out.element_w(part, elem);
        if (!field.reachable(w) || field.hops(w) != two_lambda_sq) {
          report.alignment_ok = false;
          break;
        }
        for (int l = 1; l <= n; ++l) {
          const int t = out.element_t(part, l);
          if (!field.reachable(t) || field.hops(t) != two_lambda_sq) {
            report.alignment_ok = false;
            break;
          }
        }
        if (!report.alignment_ok) break;
      }
    }
  }
  if (!report.alignment_ok) {
    throw StructuralMismatchError("adjacency paths are not aligned at 2*lambda^2");
  }

  if (check_equivalence) {
    const bool matching_exists = solve_3dm_exact(inst).has_value();
    const SolveResult at_k = solve_exact(d, out.k);
    const SolveResult below_k = solve_exact(d, out.k - 1);
    const bool geodetic_at_k = at_k.found() && at_k.size == out.k;
    if (below_k.found()) {
      throw StructuralMismatchError(
          "a geodetic set below the threshold exists");
    }
    report.equivalence_ok = matching_exists == geodetic_at_k;
    if (at_k.found()) report.geodetic_number = at_k.size;
    if (!*report.equivalence_ok) {
      throw StructuralMismatchError(
          std::string("matching oracle says ") +
          (matching_exists ? "yes" : "no") + " but capped search says " +
          (geodetic_at_k ? "yes" : "no"));
    }
  }
  return report;
}

ReductionReport verify_reduction(const ThreeDMInstance& inst,
                                 const ReductionOutput& out) {
  return verify_reduction(inst, out, out.digraph.vertex_count() <= 1000);
}

}  // namespace geodetic
