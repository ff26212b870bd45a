#ifndef GEODETIC_METRIC_HPP
#define GEODETIC_METRIC_HPP

#include <cstdint>
#include <vector>

#include "geodetic/digraph.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

enum class Direction { forward, backward };

// Hop distances from (forward) or to (backward) an origin vertex.
// Unreachable vertices carry an explicit marker; reachable() must be
// checked before doing arithmetic on hops().
class DistanceField {
 public:
  DistanceField(int origin, Direction direction, std::vector<std::int64_t> hops)
      : origin_(origin), direction_(direction), hops_(std::move(hops)) {}

  int origin() const { return origin_; }
  Direction direction() const { return direction_; }
  bool reachable(int v) const {
    return hops_[static_cast<std::size_t>(v)] != kUnreachable;
  }
  std::int64_t hops(int v) const { return hops_[static_cast<std::size_t>(v)]; }

  static constexpr std::int64_t kUnreachable = -1;

 private:
  int origin_;
  Direction direction_;
  std::vector<std::int64_t> hops_;
};

DistanceField bfs_distances(const Digraph& d, int origin, Direction direction);

// Vertices on some shortest directed path from u to v. interval(u, u) is
// {u}; an unreachable ordered pair yields the empty set.
VertexSet interval(const Digraph& d, int u, int v);

// Geodetic closure: the union of interval(u, v) over all ordered pairs
// from s. Always a superset of s.
VertexSet closure(const Digraph& d, const VertexSet& s);

// True iff closure(d, s) covers every vertex.
bool is_geodetic(const Digraph& d, const VertexSet& s);

}  // namespace geodetic

#endif
