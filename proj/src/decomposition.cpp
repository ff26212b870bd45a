#include "geodetic/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace geodetic {

const char* path_class_name(PathClass c) {
  switch (c) {
    case PathClass::dipath:
      return "dipath";
    case PathClass::one_extremal:
      return "one_extremal";
    case PathClass::two_extremals:
      return "two_extremals";
    case PathClass::many_extremals:
      return "many_extremals";
  }
  return "?";
}

namespace {

void classify_core_path(const Digraph& d, CorePath& p) {
  const int l = static_cast<int>(p.inner.size());
  for (int idx = 0; idx < l; ++idx) {
    const int v = p.inner[static_cast<std::size_t>(idx)];
    if (d.in_degree(v) == 0 || d.out_degree(v) == 0) {
      p.inner_extremals.push_back(idx);
    }
    const int prev =
        idx == 0 ? p.endpoint_a : p.inner[static_cast<std::size_t>(idx - 1)];
    const int next = idx == l - 1 ? p.endpoint_b
                                  : p.inner[static_cast<std::size_t>(idx + 1)];
    const bool both_in = d.has_arc(prev, v) && d.has_arc(next, v);
    const bool both_out = d.has_arc(v, prev) && d.has_arc(v, next);
    if (both_in || both_out) p.orientation_breaks.push_back(idx);
  }

  const auto& br = p.orientation_breaks;
  switch (br.size()) {
    case 0:
      p.cls = PathClass::dipath;
      if (l > 0) {
        if (d.has_arc(p.endpoint_a, p.inner.front())) {
          p.candidates.push_back(p.inner.front());
        } else if (d.has_arc(p.endpoint_b, p.inner.back())) {
          p.candidates.push_back(p.inner.back());
        }
      }
      break;
    case 1:
      p.cls = PathClass::one_extremal;
      if (br[0] != 0) p.candidates.push_back(p.inner.front());
      if (br[0] != l - 1) p.candidates.push_back(p.inner.back());
      break;
    case 2: {
      p.cls = PathClass::two_extremals;
      const int i = br[0], j = br[1];
      if (j > i + 1) {
        // The segment between the two breaks is uniformly oriented; take
        // the successor of its source-side break.
        if (d.has_arc(p.inner[static_cast<std::size_t>(i)],
                      p.inner[static_cast<std::size_t>(i + 1)])) {
          p.candidates.push_back(p.inner[static_cast<std::size_t>(i + 1)]);
        } else if (d.has_arc(p.inner[static_cast<std::size_t>(j)],
                             p.inner[static_cast<std::size_t>(j - 1)])) {
          p.candidates.push_back(p.inner[static_cast<std::size_t>(j - 1)]);
        }
      }
      break;
    }
    default:
      p.cls = PathClass::many_extremals;
      break;
  }
}

}  // namespace

Decomposition decompose(const Digraph& d) {
  const int n = d.vertex_count();
  const UndirectedGraph g = underlying_graph(d);

  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges) {
    nbrs[static_cast<std::size_t>(u)].push_back(v);
    nbrs[static_cast<std::size_t>(v)].push_back(u);
  }

  Decomposition dec;

  // fen per underlying component.
  const std::vector<std::vector<int>> comps = underlying_components(d);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  dec.fen_per_component.assign(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    dec.fen_per_component[c] = 1 - static_cast<int>(comps[c].size());
  }
  for (const auto& [u, v] : g.edges) {
    ++dec.fen_per_component[static_cast<std::size_t>(
        comp_of[static_cast<std::size_t>(u)])];
  }
  for (int f : dec.fen_per_component) dec.fen_total += f;

  // Iterated leaf removal; degree <= 1 so whole tree components vanish.
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] =
        static_cast<int>(nbrs[static_cast<std::size_t>(v)].size());
  }
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] <= 1) queue.push_back(v);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    removed[static_cast<std::size_t>(v)] = 1;
    for (int w : nbrs[static_cast<std::size_t>(v)]) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      if (--deg[static_cast<std::size_t>(w)] == 1) queue.push_back(w);
    }
  }

  std::vector<int> base_deg(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    dec.base_vertices.push_back(v);
    int bd = 0;
    for (int w : nbrs[static_cast<std::size_t>(v)]) {
      if (!removed[static_cast<std::size_t>(w)]) ++bd;
    }
    base_deg[static_cast<std::size_t>(v)] = bd;
    if (bd >= 3) dec.core_vertices.push_back(v);
  }
  std::vector<std::uint8_t> is_core(static_cast<std::size_t>(n), 0);
  for (int v : dec.core_vertices) is_core[static_cast<std::size_t>(v)] = 1;

  // Hanging trees: connected pieces of removed vertices; the unique base
  // neighbor of a piece is its root (absent for whole tree components).
  {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      if (!removed[static_cast<std::size_t>(s)] ||
          seen[static_cast<std::size_t>(s)]) {
        continue;
      }
      HangingTree tree;
      std::vector<int> stack{s};
      seen[static_cast<std::size_t>(s)] = 1;
      std::set<int> roots;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        tree.members.push_back(v);
        for (int w : nbrs[static_cast<std::size_t>(v)]) {
          if (!removed[static_cast<std::size_t>(w)]) {
            roots.insert(w);
          } else if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
          }
        }
      }
      assert(roots.size() <= 1);
      if (!roots.empty()) tree.root = *roots.begin();
      std::sort(tree.members.begin(), tree.members.end());
      dec.hanging_trees.push_back(std::move(tree));
    }
  }

  // Core paths: walk from each core vertex through degree-2 base vertices
  // until the next core vertex. Base vertices never reached this way form
  // bare cycles.
  {
    std::set<std::pair<int, int>> walked;  // normalized base edges
    auto mark = [&](int u, int v) {
      walked.insert({std::min(u, v), std::max(u, v)});
    };
    auto is_walked = [&](int u, int v) {
      return walked.count({std::min(u, v), std::max(u, v)}) > 0;
    };
    std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);

    for (int u : dec.core_vertices) {
      for (int w0 : nbrs[static_cast<std::size_t>(u)]) {
        if (removed[static_cast<std::size_t>(w0)] || is_walked(u, w0)) continue;
        CorePath path;
        path.endpoint_a = u;
        mark(u, w0);
        int prev = u, cur = w0;
        while (!is_core[static_cast<std::size_t>(cur)]) {
          path.inner.push_back(cur);
          on_path[static_cast<std::size_t>(cur)] = 1;
          int next = -1;
          for (int w : nbrs[static_cast<std::size_t>(cur)]) {
            if (removed[static_cast<std::size_t>(w)] || w == prev) continue;
            next = w;
            break;
          }
          assert(next != -1);
          mark(cur, next);
          prev = cur;
          cur = next;
        }
        path.endpoint_b = cur;
        classify_core_path(d, path);
        dec.core_paths.push_back(std::move(path));
      }
    }

    std::vector<std::uint8_t> in_cycle_done(static_cast<std::size_t>(n), 0);
    for (int v : dec.base_vertices) {
      const auto vi = static_cast<std::size_t>(v);
      if (is_core[vi] || on_path[vi] || in_cycle_done[vi]) continue;
      // Walk the whole cycle.
      std::vector<int> cycle{v};
      in_cycle_done[vi] = 1;
      int prev = -1, cur = v;
      while (true) {
        int next = -1;
        for (int w : nbrs[static_cast<std::size_t>(cur)]) {
          if (removed[static_cast<std::size_t>(w)] || w == prev ||
              in_cycle_done[static_cast<std::size_t>(w)]) {
            continue;
          }
          next = w;
          break;
        }
        if (next == -1) break;
        in_cycle_done[static_cast<std::size_t>(next)] = 1;
        cycle.push_back(next);
        prev = cur;
        cur = next;
      }
      std::sort(cycle.begin(), cycle.end());
      dec.bare_cycle_components.push_back(std::move(cycle));
    }
  }

  return dec;
}

VertexSet extract_candidates(const Digraph& d, const Decomposition& dec) {
  if (const auto tc = d.find_two_cycle()) {
    throw HasTwoCycleError(tc->first, tc->second);
  }
  std::vector<int> out = dec.core_vertices;
  for (const CorePath& p : dec.core_paths) {
    out.insert(out.end(), p.candidates.begin(), p.candidates.end());
  }
  return VertexSet(std::move(out));
}

}  // namespace geodetic
