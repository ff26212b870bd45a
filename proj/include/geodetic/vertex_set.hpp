#ifndef GEODETIC_VERTEX_SET_HPP
#define GEODETIC_VERTEX_SET_HPP

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace geodetic {

// A set of vertex ids kept as a sorted unique vector. Iteration order is
// ascending and therefore deterministic.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> elems) : elems_(std::move(elems)) {
    normalize();
  }
  VertexSet(std::initializer_list<int> elems) : elems_(elems) { normalize(); }

  static VertexSet full(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    VertexSet s;
    s.elems_ = std::move(v);
    return s;
  }

  bool contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  void insert(int v) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v) elems_.insert(it, v);
  }

  VertexSet united(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(elems_.size() + other.elems_.size());
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(out));
    VertexSet s;
    s.elems_ = std::move(out);
    return s;
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
  }

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  const std::vector<int>& elements() const { return elems_; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  std::vector<int> elems_;
};

}  // namespace geodetic

#endif
