#ifndef GEODETIC_IO_HPP
#define GEODETIC_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodetic/digraph.hpp"
#include "geodetic/reduction_3dm.hpp"
#include "geodetic/solve_result.hpp"

namespace geodetic {

// Digraph file: {"arcs": [[tail, head], ...], "n": <int>}, 0-indexed.
// Unknown fields are rejected. Serialization emits arcs sorted by
// (tail, head), so equal graphs produce identical bytes.
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& d);

// Matching instance file: {"n": <int>, "triples": [[i, j, k], ...]},
// element indices 1-based.
ThreeDMInstance parse_3dm(const std::string& text);
std::string serialize_3dm(const ThreeDMInstance& inst);

// DOT text with one arc per line; node lines appear only when labels are
// given.
std::string export_dot(const Digraph& d,
                       const std::vector<std::string>* labels = nullptr);

// Labels sidecar for reduction outputs: k, lambda, n and the role map.
std::string serialize_reduction_labels(const ReductionOutput& out);

// Component-wise solve. `automatic` routes each underlying component to
// the tree solver when it is a tree (2-cycles allowed), to the fen solver
// when it has no 2-cycle, and to brute force otherwise; a forced
// algorithm is applied to every component and its precondition failures
// propagate. A size cap turns the search into a bounded existence check.
SolveResult solve_dispatch(const Digraph& d, Algorithm algo,
                           std::optional<int> size_cap = std::nullopt,
                           const SolveOptions& options = {});

std::optional<Algorithm> algorithm_from_name(const std::string& name);

struct BenchRecord {
  std::string instance_id;
  std::string kind;
  int n = 0;
  int arcs = 0;
  int fen = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  int size = 0;
  double elapsed_seconds = 0.0;
  std::uint64_t cover_checks = 0;
  std::uint64_t subsets_examined = 0;
};

// Bench spec: {"runs": [{"kind": ..., "n": ..., "seeds": [...],
// "algos": [...], optional "p2"/"fen"/"m"}, ...]}.
std::vector<BenchRecord> run_bench(const std::string& spec_text,
                                   const SolveOptions& options = {});
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace geodetic

#endif
