#include "geodetic/solver_fen.hpp"

#include <algorithm>
#include <chrono>

#include "geodetic/decomposition.hpp"
#include "geodetic/metric.hpp"
#include "geodetic/solver_ditree.hpp"
#include "geodetic/subset_search.hpp"

namespace geodetic {

namespace {

struct ComponentSolve {
  VertexSet witness;
  bool verified = false;
  SolveStats stats;
};

ComponentSolve extend_forced(const Digraph& sub, const VertexSet& forced,
                             std::vector<int> pool,
                             const SolveOptions& options) {
  ComponentSolve out;
  MinimumExtensionSearch search(sub, forced.elements(), std::move(pool));
  auto outcome = search.run(-1, options.threads);
  out.stats.cover_checks = outcome.cover_checks;
  out.stats.subsets_examined = outcome.subsets_examined;
  // V itself is geodetic, so an unbounded search always extends.
  out.witness = forced.united(VertexSet(*outcome.extension));
  out.verified = is_geodetic(sub, out.witness);
  return out;
}

ComponentSolve solve_component(const Digraph& sub, const SolveOptions& options) {
  const Decomposition dec = decompose(sub);
  const VertexSet forced = extremal_vertices(sub);

  if (dec.base_vertices.empty()) {
    // Tree component: the extremal vertices are a minimum geodetic set.
    ComponentSolve out;
    out.witness = forced;
    out.verified = ditree_is_geodetic(sub, out.witness);
    out.stats.cover_checks = 1;
    return out;
  }

  if (dec.core_vertices.empty()) {
    const SolveResult r =
        solve_bare_cycle(sub, VertexSet(dec.bare_cycle_components.front()),
                         options);
    return {r.witness, r.verified, r.stats};
  }

  const VertexSet candidates = extract_candidates(sub, dec);
  std::vector<int> pool;
  for (int v : candidates) {
    if (!forced.contains(v)) pool.push_back(v);
  }
  return extend_forced(sub, forced, std::move(pool), options);
}

}  // namespace

SolveResult solve_bare_cycle(const Digraph& component,
                             const VertexSet& cycle_vertices,
                             const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (const auto tc = component.find_two_cycle()) {
    throw HasTwoCycleError(tc->first, tc->second);
  }
  const Decomposition dec = decompose(component);
  if (!dec.core_vertices.empty()) {
    throw PreconditionError("base graph has a core vertex; not a bare cycle");
  }
  if (dec.bare_cycle_components.size() != 1 ||
      VertexSet(dec.bare_cycle_components.front()) != cycle_vertices) {
    throw PreconditionError("cycle_vertices does not match the base cycle");
  }

  const VertexSet forced = extremal_vertices(component);
  std::vector<int> pool;
  for (int v : cycle_vertices) {
    if (!forced.contains(v)) pool.push_back(v);
  }
  ComponentSolve cs = extend_forced(component, forced, std::move(pool), options);

  SolveResult result;
  result.algorithm = Algorithm::fen;
  result.witness = std::move(cs.witness);
  result.size = result.witness.size();
  result.verified = cs.verified;
  result.stats = cs.stats;
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

SolveResult solve_fen(const Digraph& d, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (const auto tc = d.find_two_cycle()) {
    throw HasTwoCycleError(tc->first, tc->second);
  }

  SolveResult result;
  result.algorithm = Algorithm::fen;
  result.verified = true;

  std::vector<int> witness;
  for (const std::vector<int>& comp : underlying_components(d)) {
    const Digraph sub = induced_subgraph(d, comp);
    ComponentSolve cs = solve_component(sub, options);
    for (int local : cs.witness) {
      witness.push_back(comp[static_cast<std::size_t>(local)]);
    }
    result.verified = result.verified && cs.verified;
    result.stats.absorb(cs.stats);
  }
  result.witness = VertexSet(std::move(witness));
  result.size = result.witness.size();
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace geodetic
