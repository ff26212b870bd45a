#include "geodetic/metric.hpp"

#include <queue>

namespace geodetic {

DistanceField bfs_distances(const Digraph& d, int origin, Direction direction) {
  const int n = d.vertex_count();
  if (origin < 0 || origin >= n) throw IndexOutOfRangeError(origin, n);
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n),
                                 DistanceField::kUnreachable);
  dist[static_cast<std::size_t>(origin)] = 0;
  std::vector<int> frontier{origin};
  std::vector<int> next;
  std::int64_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (int v : frontier) {
      const auto nbrs = direction == Direction::forward ? d.out_neighbors(v)
                                                        : d.in_neighbors(v);
      for (int w : nbrs) {
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw == DistanceField::kUnreachable) {
          dw = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return DistanceField(origin, direction, std::move(dist));
}

VertexSet interval(const Digraph& d, int u, int v) {
  const int n = d.vertex_count();
  if (u < 0 || u >= n) throw IndexOutOfRangeError(u, n);
  if (v < 0 || v >= n) throw IndexOutOfRangeError(v, n);
  if (u == v) return VertexSet{u};
  const DistanceField from_u = bfs_distances(d, u, Direction::forward);
  if (!from_u.reachable(v)) return VertexSet{};
  const DistanceField to_v = bfs_distances(d, v, Direction::backward);
  const std::int64_t total = from_u.hops(v);
  std::vector<int> members;
  for (int w = 0; w < n; ++w) {
    if (from_u.reachable(w) && to_v.reachable(w) &&
        from_u.hops(w) + to_v.hops(w) == total) {
      members.push_back(w);
    }
  }
  return VertexSet(std::move(members));
}

VertexSet closure(const Digraph& d, const VertexSet& s) {
  const int n = d.vertex_count();
  const auto& members = s.elements();
  std::vector<DistanceField> fwd, bwd;
  fwd.reserve(members.size());
  bwd.reserve(members.size());
  for (int v : members) {
    fwd.push_back(bfs_distances(d, v, Direction::forward));
    bwd.push_back(bfs_distances(d, v, Direction::backward));
  }
  std::vector<int> covered;
  for (int w = 0; w < n; ++w) {
    bool hit = false;
    for (std::size_t i = 0; i < members.size() && !hit; ++i) {
      if (!fwd[i].reachable(w)) continue;
      for (std::size_t j = 0; j < members.size(); ++j) {
        // w lies on a shortest path from members[i] to members[j].
        if (!bwd[j].reachable(w)) continue;
        const int target = members[j];
        if (!fwd[i].reachable(target)) continue;
        if (fwd[i].hops(w) + bwd[j].hops(w) == fwd[i].hops(target)) {
          hit = true;
          break;
        }
      }
    }
    if (hit) covered.push_back(w);
  }
  return VertexSet(std::move(covered));
}

bool is_geodetic(const Digraph& d, const VertexSet& s) {
  return closure(d, s).size() == d.vertex_count();
}

}  // namespace geodetic
