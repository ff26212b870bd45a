#ifndef GEODETIC_SOLVER_FEN_HPP
#define GEODETIC_SOLVER_FEN_HPP

#include "geodetic/digraph.hpp"
#include "geodetic/solve_result.hpp"

namespace geodetic {

// Minimum geodetic set of an oriented graph (no 2-cycles), parameterized
// by the feedback edge number of the underlying graph. Per underlying
// component: a tree component is answered by its extremal vertices; a
// component whose base graph is a bare cycle falls back to exhaustive
// search over the cycle vertices; otherwise subsets of the core-path
// candidate pool are enumerated on top of the forced extremal set, in
// increasing size, and the first geodetic hit is returned.
SolveResult solve_fen(const Digraph& d, const SolveOptions& options = {});

// Exhaustive treatment of a connected component whose base graph is a
// cycle without core vertices: extend the extremal set by subsets of the
// cycle vertices in increasing size. Exact; used where the candidate
// rules do not apply.
SolveResult solve_bare_cycle(const Digraph& component,
                             const VertexSet& cycle_vertices,
                             const SolveOptions& options = {});

}  // namespace geodetic

#endif
