#ifndef GEODETIC_SOLVER_DITREE_HPP
#define GEODETIC_SOLVER_DITREE_HPP

#include <cstdint>
#include <vector>

#include "geodetic/digraph.hpp"
#include "geodetic/solve_result.hpp"

namespace geodetic {

// Quotient of a ditree under repeated contraction of 2-cycles whose two
// endpoints are both internal (non-leaf) vertices. In the result the only
// remaining 2-cycles touch a leaf. Kept for validation; the solver below
// does not need it.
struct ContractedDitree {
  Digraph contracted;
  std::vector<int> vertex_map;  // original vertex -> contracted vertex
};

// contraction_order_seed = 0 picks candidates in a fixed sorted order;
// any other seed contracts in a shuffled order. The final quotient is the
// same either way (asserted by tests), classes are labeled by their
// smallest original member.
ContractedDitree contract_ditree(const Digraph& t,
                                 std::uint64_t contraction_order_seed = 0);

// Minimum geodetic set of a ditree in O(n + arcs): all leaves plus one
// representative (smallest id) of every source set and sink set that
// contains no leaf.
SolveResult solve_ditree(const Digraph& t);

// Linear-time geodetic test specialized to ditrees. In a tree every
// directed path is the unique shortest path between its endpoints, so a
// vertex w is covered iff it belongs to s, or some member of s reaches w
// through one tree neighbor while another member is reachable from w
// through a different tree neighbor. Equivalent to is_geodetic(t, s);
// used where the general closure computation would be quadratic.
bool ditree_is_geodetic(const Digraph& t, const VertexSet& s);

}  // namespace geodetic

#endif
