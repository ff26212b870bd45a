#ifndef GEODETIC_SOLVE_RESULT_HPP
#define GEODETIC_SOLVE_RESULT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "geodetic/vertex_set.hpp"

namespace geodetic {

enum class Algorithm { exact, ditree, fen, automatic };

inline std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::exact:
      return "exact";
    case Algorithm::ditree:
      return "ditree";
    case Algorithm::fen:
      return "fen";
    case Algorithm::automatic:
      return "auto";
  }
  return "?";
}

struct SolveStats {
  std::uint64_t cover_checks = 0;      // geodetic evaluations performed
  std::uint64_t subsets_examined = 0;  // candidate sets enumerated
  double elapsed_seconds = 0.0;

  void absorb(const SolveStats& other) {
    cover_checks += other.cover_checks;
    subsets_examined += other.subsets_examined;
    elapsed_seconds += other.elapsed_seconds;
  }
};

// Outcome of a solver run. When cap_exceeded is false the witness is a
// minimum geodetic set, size == |witness| and verified records the
// re-check of the witness against the closure semantics. A capped search
// that proves no set within the cap exists reports cap_exceeded instead;
// that outcome carries no witness.
struct SolveResult {
  VertexSet witness;
  int size = 0;
  Algorithm algorithm = Algorithm::exact;
  bool verified = false;
  bool cap_exceeded = false;
  std::optional<int> size_cap;
  SolveStats stats;

  bool found() const { return !cap_exceeded; }
};

struct SolveOptions {
  int threads = 1;  // subset enumeration workers; results are identical
                    // for every thread count
};

}  // namespace geodetic

#endif
