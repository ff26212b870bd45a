#ifndef GEODETIC_SUBSET_SEARCH_HPP
#define GEODETIC_SUBSET_SEARCH_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "geodetic/digraph.hpp"

namespace geodetic {

// Shared engine behind the exhaustive solvers: find the smallest set X
// drawn from `pool` such that forced ∪ X is geodetic, enumerating X by
// increasing size and, within a size, by lexicographic order of the
// sorted vertex tuple. The first hit under that order is returned no
// matter how many worker threads scan the combination space, so results
// are identical across thread counts.
//
// Coverage is tested incrementally: distance fields and the vertex sets
// covered by all (candidate, forced) pairs are computed once per vertex
// on first use, and each enumerated X only unions precomputed bitmasks
// plus the |X|^2 cross pairs. Work counters may vary with the thread
// count; the outcome never does.
class MinimumExtensionSearch {
 public:
  MinimumExtensionSearch(const Digraph& d, std::vector<int> forced,
                         std::vector<int> pool);

  struct Outcome {
    std::optional<std::vector<int>> extension;  // ascending vertex ids
    std::uint64_t cover_checks = 0;
    std::uint64_t subsets_examined = 0;
  };

  // max_extra bounds |X| (values above |pool| are clamped); threads >= 1.
  Outcome run(int max_extra, int threads = 1);

 private:
  using Mask = std::vector<std::uint64_t>;

  const Digraph& d_;
  std::vector<int> forced_;
  std::vector<int> pool_;
  int n_ = 0;
  std::size_t words_ = 0;

  Mask base_cover_;

  std::vector<std::vector<std::int32_t>> fwd_, bwd_;
  std::unique_ptr<std::once_flag[]> field_once_;
  std::vector<Mask> add_cover_;
  std::unique_ptr<std::once_flag[]> add_once_;

  void ensure_fields(int v);
  void ensure_add_cover(std::size_t pool_index);
  void accumulate_pair(int u, int v, Mask& mask);
  bool mask_full(const Mask& mask) const;
  bool covers(const std::vector<std::size_t>& combo, Mask& scratch);
};

}  // namespace geodetic

#endif
