#include "geodetic/digraph.hpp"

#include <algorithm>
#include <queue>

namespace geodetic {

namespace {

std::uint64_t arc_key(int tail, int head) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
         static_cast<std::uint32_t>(head);
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  check_and_index();
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : n_(n) {
  arcs_.reserve(arcs.size());
  for (const auto& [t, h] : arcs) arcs_.push_back({t, h});
  check_and_index();
}

void Digraph::check_and_index() {
  if (n_ < 0) throw IndexOutOfRangeError(n_, 0);
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n_) throw IndexOutOfRangeError(a.tail, n_);
    if (a.head < 0 || a.head >= n_) throw IndexOutOfRangeError(a.head, n_);
    if (a.tail == a.head) throw SelfLoopError(a.tail);
  }
  arc_keys_.reserve(arcs_.size());
  for (const Arc& a : arcs_) arc_keys_.push_back(arc_key(a.tail, a.head));
  std::sort(arc_keys_.begin(), arc_keys_.end());
  for (std::size_t i = 1; i < arc_keys_.size(); ++i) {
    if (arc_keys_[i] == arc_keys_[i - 1]) {
      throw DuplicateArcError(static_cast<int>(arc_keys_[i] >> 32),
                              static_cast<int>(arc_keys_[i] & 0xFFFFFFFFULL));
    }
  }

  const auto nn = static_cast<std::size_t>(n_);
  out_off_.assign(nn + 1, 0);
  in_off_.assign(nn + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_off_[static_cast<std::size_t>(a.tail) + 1];
    ++in_off_[static_cast<std::size_t>(a.head) + 1];
  }
  for (std::size_t v = 0; v < nn; ++v) {
    out_off_[v + 1] += out_off_[v];
    in_off_[v + 1] += in_off_[v];
  }
  out_adj_.resize(arcs_.size());
  in_adj_.resize(arcs_.size());
  std::vector<int> out_pos(out_off_.begin(), out_off_.end() - 1);
  std::vector<int> in_pos(in_off_.begin(), in_off_.end() - 1);
  for (const Arc& a : arcs_) {
    out_adj_[static_cast<std::size_t>(
        out_pos[static_cast<std::size_t>(a.tail)]++)] = a.head;
    in_adj_[static_cast<std::size_t>(
        in_pos[static_cast<std::size_t>(a.head)]++)] = a.tail;
  }
  for (std::size_t v = 0; v < nn; ++v) {
    std::sort(out_adj_.begin() + out_off_[v], out_adj_.begin() + out_off_[v + 1]);
    std::sort(in_adj_.begin() + in_off_[v], in_adj_.begin() + in_off_[v + 1]);
  }
}

bool Digraph::has_arc(int tail, int head) const {
  return std::binary_search(arc_keys_.begin(), arc_keys_.end(),
                            arc_key(tail, head));
}

std::optional<std::pair<int, int>> Digraph::find_two_cycle() const {
  for (const Arc& a : arcs_) {
    if (a.tail < a.head && has_arc(a.head, a.tail)) {
      return std::make_pair(a.tail, a.head);
    }
  }
  return std::nullopt;
}

Digraph Digraph::reversed() const {
  std::vector<Arc> rev;
  rev.reserve(arcs_.size());
  for (const Arc& a : arcs_) rev.push_back({a.head, a.tail});
  return Digraph(n_, std::move(rev));
}

Digraph build_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
  return Digraph(n, arcs);
}

std::vector<int> underlying_degrees(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Arc& a : d.arcs()) {
    // Count each simple edge once: the reverse twin of a 2-cycle is
    // skipped for the smaller endpoint pair.
    if (a.tail > a.head && d.has_arc(a.head, a.tail)) continue;
    ++deg[static_cast<std::size_t>(a.tail)];
    ++deg[static_cast<std::size_t>(a.head)];
  }
  return deg;
}

UndirectedGraph underlying_graph(const Digraph& d) {
  UndirectedGraph g;
  g.n = d.vertex_count();
  g.edges.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) {
    g.edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::vector<std::vector<int>> underlying_components(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[static_cast<std::size_t>(s)] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[static_cast<std::size_t>(id)].push_back(v);
      auto visit = [&](int w) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      };
      for (int w : d.out_neighbors(v)) visit(w);
      for (int w : d.in_neighbors(v)) visit(w);
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

VertexClassification classify_vertices(const Digraph& d) {
  const int n = d.vertex_count();
  const auto nn = static_cast<std::size_t>(n);
  VertexClassification c;
  c.is_source.assign(nn, 0);
  c.is_sink.assign(nn, 0);
  c.is_extremal.assign(nn, 0);
  c.is_transitive.assign(nn, 0);
  c.is_leaf.assign(nn, 0);
  c.has_two_cycle_incident.assign(nn, 0);

  const std::vector<int> deg = underlying_degrees(d);
  for (int v = 0; v < n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    c.is_source[vi] = d.in_degree(v) == 0;
    c.is_sink[vi] = d.out_degree(v) == 0;
    c.is_extremal[vi] = c.is_source[vi] || c.is_sink[vi];
    c.is_leaf[vi] = deg[vi] == 1;
    for (int w : d.out_neighbors(v)) {
      if (d.has_arc(w, v)) {
        c.has_two_cycle_incident[vi] = 1;
        break;
      }
    }
    bool transitive = true;
    for (int u1 : d.in_neighbors(v)) {
      for (int u2 : d.out_neighbors(v)) {
        if (u1 != u2 && !d.has_arc(u1, u2)) {
          transitive = false;
          break;
        }
      }
      if (!transitive) break;
    }
    c.is_transitive[vi] = transitive;
  }
  return c;
}

VertexSet extremal_vertices(const Digraph& d) {
  std::vector<int> out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.in_degree(v) == 0 || d.out_degree(v) == 0) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

namespace {

// Iterative Tarjan; recursion would overflow on path-shaped inputs.
struct TarjanState {
  const Digraph& d;
  std::vector<int> index, lowlink, comp_of;
  std::vector<std::uint8_t> on_stack;
  std::vector<int> stack;
  int next_index = 0;
  int comp_count = 0;

  explicit TarjanState(const Digraph& d)
      : d(d),
        index(static_cast<std::size_t>(d.vertex_count()), -1),
        lowlink(static_cast<std::size_t>(d.vertex_count()), 0),
        comp_of(static_cast<std::size_t>(d.vertex_count()), -1),
        on_stack(static_cast<std::size_t>(d.vertex_count()), 0) {}

  void run(int root) {
    struct Frame {
      int v;
      std::size_t next_child;
    };
    std::vector<Frame> frames;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto vi = static_cast<std::size_t>(f.v);
      if (f.next_child == 0) {
        index[vi] = lowlink[vi] = next_index++;
        stack.push_back(f.v);
        on_stack[vi] = 1;
      }
      const auto succ = d.out_neighbors(f.v);
      bool descended = false;
      while (f.next_child < succ.size()) {
        const int w = succ[f.next_child++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[wi]) lowlink[vi] = std::min(lowlink[vi], index[wi]);
      }
      if (descended) continue;
      if (lowlink[vi] == index[vi]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp_of[static_cast<std::size_t>(w)] = comp_count;
          if (w == f.v) break;
        }
        ++comp_count;
      }
      const int done = f.v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto pi = static_cast<std::size_t>(frames.back().v);
        lowlink[pi] =
            std::min(lowlink[pi], lowlink[static_cast<std::size_t>(done)]);
      }
    }
  }
};

}  // namespace

SccPartition strongly_connected_components(const Digraph& d) {
  const int n = d.vertex_count();
  TarjanState t(d);
  for (int v = 0; v < n; ++v) {
    if (t.index[static_cast<std::size_t>(v)] == -1) t.run(v);
  }

  // Renumber components by their smallest member.
  std::vector<int> min_member(static_cast<std::size_t>(t.comp_count),
                              n);
  for (int v = 0; v < n; ++v) {
    auto& m = min_member[static_cast<std::size_t>(
        t.comp_of[static_cast<std::size_t>(v)])];
    m = std::min(m, v);
  }
  std::vector<int> order(static_cast<std::size_t>(t.comp_count));
  for (int i = 0; i < t.comp_count; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return min_member[static_cast<std::size_t>(a)] <
           min_member[static_cast<std::size_t>(b)];
  });
  std::vector<int> new_id(static_cast<std::size_t>(t.comp_count));
  for (int i = 0; i < t.comp_count; ++i) {
    new_id[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  }

  SccPartition p;
  p.component_of.resize(static_cast<std::size_t>(n));
  p.members.resize(static_cast<std::size_t>(t.comp_count));
  for (int v = 0; v < n; ++v) {
    const int c = new_id[static_cast<std::size_t>(
        t.comp_of[static_cast<std::size_t>(v)])];
    p.component_of[static_cast<std::size_t>(v)] = c;
    p.members[static_cast<std::size_t>(c)].push_back(v);
  }

  p.is_source_set.assign(static_cast<std::size_t>(t.comp_count), 1);
  p.is_sink_set.assign(static_cast<std::size_t>(t.comp_count), 1);
  p.contains_leaf.assign(static_cast<std::size_t>(t.comp_count), 0);
  for (const Arc& a : d.arcs()) {
    const int ct = p.component_of[static_cast<std::size_t>(a.tail)];
    const int ch = p.component_of[static_cast<std::size_t>(a.head)];
    if (ct != ch) {
      p.is_sink_set[static_cast<std::size_t>(ct)] = 0;
      p.is_source_set[static_cast<std::size_t>(ch)] = 0;
    }
  }
  const std::vector<int> deg = underlying_degrees(d);
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) {
      p.contains_leaf[static_cast<std::size_t>(
          p.component_of[static_cast<std::size_t>(v)])] = 1;
    }
  }
  return p;
}

Digraph induced_subgraph(const Digraph& d, const std::vector<int>& vertices) {
  std::vector<int> local(static_cast<std::size_t>(d.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    const int t = local[static_cast<std::size_t>(a.tail)];
    const int h = local[static_cast<std::size_t>(a.head)];
    if (t != -1 && h != -1) arcs.push_back({t, h});
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(arcs));
}

bool is_underlying_tree(const Digraph& d) {
  const UndirectedGraph g = underlying_graph(d);
  if (g.n == 0) return false;
  if (static_cast<int>(g.edges.size()) != g.n - 1) return false;
  return static_cast<int>(underlying_components(d).size()) == 1;
}

}  // namespace geodetic
