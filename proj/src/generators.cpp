#include "geodetic/generators.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "geodetic/rng.hpp"

namespace geodetic {

namespace {

// Uniform labeled tree: decode a uniform sequence over [0, n)^(n-2).
// Decoding a fixed sequence is deterministic, so the edge list (and its
// order) depends only on the seed.
std::vector<std::pair<int, int>> random_tree_edges(int n, SplitMix64& rng) {
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& s : seq) s = rng.next_int_below(n);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : seq) ++degree[static_cast<std::size_t>(s)];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  for (int s : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[static_cast<std::size_t>(s)] == 1) leaves.push(s);
  }
  const int u = leaves.top();
  leaves.pop();
  const int v = leaves.top();
  edges.emplace_back(u, v);
  return edges;
}

}  // namespace

Digraph gen_ditree(int n, double two_cycle_probability, std::uint64_t seed) {
  if (n < 1) throw InfeasibleParametersError("ditree needs n >= 1");
  if (two_cycle_probability < 0.0 || two_cycle_probability > 1.0) {
    throw InfeasibleParametersError("2-cycle probability outside [0, 1]");
  }
  SplitMix64 rng(seed);
  const auto edges = random_tree_edges(n, rng);
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [x, y] : edges) {
    if (rng.next_unit() < two_cycle_probability) {
      arcs.push_back({x, y});
      arcs.push_back({y, x});
    } else if (rng.next_bool()) {
      arcs.push_back({y, x});
    } else {
      arcs.push_back({x, y});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph gen_oriented_fen(int n, int fen_target, std::uint64_t seed) {
  if (n < 1) throw InfeasibleParametersError("graph needs n >= 1");
  if (fen_target < 0) throw InfeasibleParametersError("fen must be >= 0");
  const std::uint64_t max_extra =
      static_cast<std::uint64_t>(n) * (n - 1) / 2 -
      static_cast<std::uint64_t>(n > 0 ? n - 1 : 0);
  if (static_cast<std::uint64_t>(fen_target) > max_extra) {
    throw InfeasibleParametersError(
        "fen " + std::to_string(fen_target) + " infeasible for n = " +
        std::to_string(n));
  }

  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges = random_tree_edges(n, rng);
  std::set<std::pair<int, int>> present;
  for (const auto& [x, y] : edges) present.insert(std::minmax(x, y));
  int added = 0;
  while (added < fen_target) {
    const int x = rng.next_int_below(n);
    const int y = rng.next_int_below(n);
    if (x == y) continue;
    const auto key = std::minmax(x, y);
    if (!present.insert(key).second) continue;
    edges.emplace_back(x, y);
    ++added;
  }

  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& [x, y] : edges) {
    if (rng.next_bool()) {
      arcs.push_back({y, x});
    } else {
      arcs.push_back({x, y});
    }
  }
  return Digraph(n, std::move(arcs));
}

ThreeDMInstance gen_3dm(int n, int m, bool planted, std::uint64_t seed) {
  if (n < 1) throw InfeasibleParametersError("matching instance needs n >= 1");
  if (planted && m < n) {
    throw InfeasibleParametersError("planted instance needs m >= n");
  }
  const std::uint64_t cube =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
      static_cast<std::uint64_t>(n);
  if (static_cast<std::uint64_t>(m) > cube) {
    throw InfeasibleParametersError("more triples than distinct ones exist");
  }
  if (m < 1) throw InfeasibleParametersError("matching instance needs m >= 1");

  SplitMix64 rng(seed);
  ThreeDMInstance inst;
  inst.n = n;
  std::set<std::array<int, 3>> seen;

  auto shuffled_identity = [&] {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.next_below(i)]);
    }
    return perm;
  };

  if (planted) {
    const std::vector<int> beta = shuffled_identity();
    const std::vector<int> gamma = shuffled_identity();
    for (int i = 1; i <= n; ++i) {
      const std::array<int, 3> t = {i, beta[static_cast<std::size_t>(i - 1)],
                                    gamma[static_cast<std::size_t>(i - 1)]};
      seen.insert(t);
      inst.triples.push_back(t);
    }
  }
  while (static_cast<int>(inst.triples.size()) < m) {
    const std::array<int, 3> t = {rng.next_int_below(n) + 1,
                                  rng.next_int_below(n) + 1,
                                  rng.next_int_below(n) + 1};
    if (!seen.insert(t).second) continue;
    inst.triples.push_back(t);
  }
  // Hide the planted block's position.
  for (std::size_t i = inst.triples.size(); i > 1; --i) {
    std::swap(inst.triples[i - 1], inst.triples[rng.next_below(i)]);
  }
  return inst;
}

Digraph generate_digraph(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::ditree:
      return gen_ditree(spec.n, spec.p2, spec.seed);
    case GenKind::oriented_tree:
      return gen_ditree(spec.n, 0.0, spec.seed);
    case GenKind::oriented_fen:
      return gen_oriented_fen(spec.n, spec.fen, spec.seed);
    case GenKind::dag:
      return reduce_3dm(gen_3dm(spec.n, spec.m, true, spec.seed)).digraph;
    case GenKind::threedm:
      break;
  }
  throw InfeasibleParametersError("kind does not generate a digraph");
}

}  // namespace geodetic
