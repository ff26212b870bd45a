#ifndef GEODETIC_GENERATORS_HPP
#define GEODETIC_GENERATORS_HPP

#include <cstdint>

#include "geodetic/digraph.hpp"
#include "geodetic/reduction_3dm.hpp"

namespace geodetic {

// Seeded instance generators. All randomness flows through SplitMix64
// (see rng.hpp), so a seed identifies the instance on every platform.

// Uniform random labeled tree skeleton; each edge becomes a 2-cycle with
// probability two_cycle_probability, otherwise a single arc of uniform
// direction.
Digraph gen_ditree(int n, double two_cycle_probability, std::uint64_t seed);

// Random spanning tree plus fen_target distinct non-tree edges, every
// edge singly oriented: an oriented graph whose underlying feedback edge
// number is exactly fen_target.
Digraph gen_oriented_fen(int n, int fen_target, std::uint64_t seed);

// Random matching instance; when planted, a hidden perfect matching is
// included and padded with m - n distinct noise triples.
ThreeDMInstance gen_3dm(int n, int m, bool planted, std::uint64_t seed);

enum class GenKind { ditree, oriented_tree, oriented_fen, dag, threedm };

struct GenSpec {
  GenKind kind = GenKind::ditree;
  int n = 1;
  int m = 0;          // triple count (threedm, dag)
  int fen = 0;        // oriented_fen
  double p2 = 0.0;    // ditree 2-cycle probability
  bool planted = true;
  std::uint64_t seed = 0;
};

// Realizes graph-valued kinds; `dag` is the reduction of a planted
// random matching instance.
Digraph generate_digraph(const GenSpec& spec);

}  // namespace geodetic

#endif
