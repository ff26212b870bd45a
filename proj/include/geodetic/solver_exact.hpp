#ifndef GEODETIC_SOLVER_EXACT_HPP
#define GEODETIC_SOLVER_EXACT_HPP

#include <optional>

#include "geodetic/digraph.hpp"
#include "geodetic/solve_result.hpp"

namespace geodetic {

// Sources, sinks and transitive vertices: all of them belong to every
// geodetic set, so exhaustive search only has to extend this set.
VertexSet mandatory_set(const Digraph& d);

// Ground-truth brute force: extend the mandatory set M by subsets X of
// V \ M in increasing size (lexicographic within a size) and return the
// first geodetic M ∪ X. Always terminates because V itself is geodetic.
// With size_cap set, a proof that no geodetic set of size <= size_cap
// exists is reported as cap_exceeded rather than searching on.
//
// Practical without a cap only while |V \ M| stays small (roughly 25).
SolveResult solve_exact(const Digraph& d,
                        std::optional<int> size_cap = std::nullopt,
                        const SolveOptions& options = {});

}  // namespace geodetic

#endif
