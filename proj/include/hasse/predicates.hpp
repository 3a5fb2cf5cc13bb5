#pragma once

#include <vector>

#include "hasse/lattice.hpp"

namespace hasse {

// Elements with exactly one lower cover and exactly one upper cover.  Bottom
// and top never qualify (bottom has no lower cover at all).
std::vector<int> doubly_irreducibles(const lattice& l);

struct rank_connectivity_result {
  bool ok = false;
  // When the lattice is not even ranked: two maximal chains of different
  // lengths, and `ranked` stays false.
  bool ranked = false;
  std::vector<int> chain_a;
  std::vector<int> chain_b;
  // When ranked but some adjacent-rank cover graph splits: the failing level
  // i (graph on R_i and R_{i+1}) and its connected components.
  int level = -1;
  std::vector<std::vector<int>> components;
  // Rank of every element when ranked.
  std::vector<int> ranks;
};

// True iff ranked and, for every 0 <= i < r(top), the subgraph of the Hasse
// diagram induced by ranks i and i+1 is connected.
rank_connectivity_result is_rank_connected(const lattice& l);

struct interval_connectivity_result {
  bool ok = false;
  // Failing interval endpoints and the components of its open interior.
  int x = -1;
  int y = -1;
  std::vector<std::vector<int>> components;
};

// True iff for every comparable pair with rank gap >= min_gap the Hasse graph
// on the open interval (x, y) is connected.  Throws not_ranked_error on
// unranked input.  min_gap = 2 is the literal definition; min_gap = 3 skips
// the length-two intervals, whose interiors are always antichains.
interval_connectivity_result is_interval_connected(const lattice& l,
                                                   int min_gap = 2);

struct dismantle_result {
  bool ok = false;
  // Removal order x_1..x_{n-2} when ok: deleting the first k leaves a
  // sublattice in which x_{k+1} is doubly irreducible.
  std::vector<int> order;
  // When not ok: the members of the stuck sublattice, which has three or
  // more elements and no doubly irreducible one.
  std::vector<int> stuck;
};

// Greedily deletes the smallest-id doubly irreducible element until only
// bottom and top remain (smallest id first, for reproducible certificates).
dismantle_result dismantling_sequence(const lattice& l);

struct corner_result {
  bool found = false;
  int x = -1;  // the doubly irreducible element
  int z = -1;  // its unique lower cover
  int w = -1;  // the corner: z <: w <: y with w != x
  int y = -1;  // its unique upper cover
};

// Finds the smallest-id corner of the doubly irreducible element x, i.e. a
// second element w sharing both of x's covers.  Throws
// not_doubly_irreducible_error when x has more than one cover on a side.
corner_result find_corner(const lattice& l, int x);

struct planarity_result {
  bool ok = false;
  // Certificate: a linear extension sigma such that comparabilities of the
  // lattice plus sigma-reversed incomparabilities form a linear order.
  // Equivalent to order dimension <= 2, which characterizes planarity.
  std::vector<int> sigma;
};

// Backtracking search over linear extensions; exponential worst case, so
// inputs larger than max_n are rejected with size_limit_error.
planarity_result is_planar(const lattice& l, int max_n = 20);

struct semimodularity_result {
  bool ok = false;
  // First ordered pair (x, y) violating the cover condition, scanned in
  // ascending (x, y) order.
  int x = -1;
  int y = -1;
};

// Upper: whenever x ^ y <: x, also y <: x v y.  Lower is the order dual:
// whenever x <: x v y, also x ^ y <: y.
semimodularity_result is_upper_semimodular(const lattice& l);
semimodularity_result is_lower_semimodular(const lattice& l);

}  // namespace hasse
