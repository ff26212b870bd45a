#include "geodetic/solver_exact.hpp"

#include <chrono>

#include "geodetic/metric.hpp"
#include "geodetic/subset_search.hpp"

namespace geodetic {

VertexSet mandatory_set(const Digraph& d) {
  const VertexClassification c = classify_vertices(d);
  std::vector<int> out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (c.is_extremal[vi] || c.is_transitive[vi]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

SolveResult solve_exact(const Digraph& d, std::optional<int> size_cap,
                        const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  result.algorithm = Algorithm::exact;
  result.size_cap = size_cap;

  const VertexSet mandatory = mandatory_set(d);
  std::vector<int> pool;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!mandatory.contains(v)) pool.push_back(v);
  }

  int max_extra = static_cast<int>(pool.size());
  if (size_cap) {
    max_extra = *size_cap - mandatory.size();
  }

  std::optional<std::vector<int>> extension;
  if (max_extra >= 0) {
    MinimumExtensionSearch search(d, mandatory.elements(), pool);
    auto outcome = search.run(max_extra, options.threads);
    result.stats.cover_checks = outcome.cover_checks;
    result.stats.subsets_examined = outcome.subsets_examined;
    extension = std::move(outcome.extension);
  }

  if (!extension) {
    result.cap_exceeded = true;
  } else {
    result.witness = mandatory.united(VertexSet(*extension));
    result.size = result.witness.size();
    result.verified = is_geodetic(d, result.witness);
  }
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace geodetic
