#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hasse/lattice.hpp"
#include "hasse/shelling.hpp"

namespace hasse {

// Elements with exactly one lower cover (the bottom never qualifies).
std::vector<int> join_irreducibles(const lattice& l);

// Order-preserving map from the join-irreducibles to positive integers;
// ties are allowed and deliberate.
using natural_labeling = std::map<int, int>;

// Streams every order-preserving map J -> {1..|J|} in ascending
// lexicographic order over J sorted by id.  The visitor returns false to
// stop early; the return value counts visited labelings.  Guarded by
// size_limit_error when |J| exceeds max_j.
long long enumerate_natural_labelings(
    const lattice& l, const std::function<bool(const natural_labeling&)>& visit,
    int max_j = 8);

// The induced cover labeling: gamma(a <: b) is the smallest omega value of
// a join-irreducible below b but not below a.  Total, because b is the join
// of the join-irreducibles below it, so at least one avoids a's down-set.
edge_labeling gamma_labeling(const lattice& l, const natural_labeling& omega);

struct admissible_check {
  bool ok = false;
  // First interval, in ascending (x, y) order, whose number of weakly
  // rising unrefinable chains under gamma is not exactly one.
  int x = -1;
  int y = -1;
  std::vector<std::vector<int>> chains;  // two rising witnesses, or none
};

// The unique-rising-chain condition alone, as admissibility demands; the
// lex-first condition of full shellability is intentionally not checked.
admissible_check check_admissible_with(const lattice& l,
                                       const natural_labeling& omega);

struct admissibility_result {
  bool ok = false;
  natural_labeling omega;  // first passing labeling in enumeration order
  long long examined = 0;  // labelings checked, including a passing one
};

admissibility_result is_admissible(const lattice& l, int max_j = 8);

}  // namespace hasse
