#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hasse/lattice.hpp"
#include "hasse/rational.hpp"

namespace hasse {

// Total assignment of an exact rational label to every cover pair.  Exact
// arithmetic because the lex-first condition compares labels strictly.
using edge_labeling = std::map<cover_pair, rational>;

enum class el_defect {
  none,
  no_rising_chain,         // some interval has no weakly rising maximal chain
  multiple_rising_chains,  // or more than one
  not_lex_first,  // the rising chain does not start strictly below a rival
};

struct el_verdict {
  bool ok = false;
  el_defect defect = el_defect::none;
  // Failing interval endpoints; the first violation in ascending
  // (rank(x), x, y) order.
  int x = -1;
  int y = -1;
  // Two rising witnesses for multiple_rising_chains (chain1 alone replays
  // no_rising_chain's empty counterpart and not_lex_first's unique chain).
  std::vector<int> chain1, chain2;
  int first_step = -1;  // first element above x on the unique rising chain
  int competitor = -1;  // atom of [x, y] labeled no higher than that step
};

// All maximal chains of [x, y] whose labels weakly rise, found depth-first
// with covers visited in (label, id) order.  Throws not_comparable_error
// when x is not below y, partial_labeling_error on an unlabeled cover.
std::vector<std::vector<int>> rising_chains(const lattice& l,
                                            const edge_labeling& f, int x,
                                            int y);

// Checks both lexicographic shellability conditions on every interval: a
// unique weakly rising maximal chain, whose first label is strictly smaller
// than the label to any other atom of the interval.  Requires a ranked
// lattice (precondition_error) and a total labeling (partial_labeling_error).
el_verdict verify_el(const lattice& l, const edge_labeling& f);

// Builds a labeling that passes verify_el for any rank-connected
// dismantlable lattice: single-element middle ranks split the lattice in
// two stacked blocks, rank-2 lattices get the fan labeling, and otherwise
// a doubly irreducible element with a corner is removed, the rest labeled
// recursively, and the two missing labels grid-searched against the
// verifier.  Throws precondition_error when the input is not rank-connected
// or not dismantlable.
edge_labeling construct_el(const lattice& l);

// Exhaustive decision of labelability: tries every order-pattern of labels
// over the covers (at most max_labels distinct values; 0 means one per
// cover), pruning any interval that completes with a condition violation.
// Returns the first labeling passing verify_el, or nothing after exhausting
// all patterns.  Guarded to lattices with at most 12 covers
// (size_limit_error).
std::optional<edge_labeling> search_el(const lattice& l, int max_labels = 0);

}  // namespace hasse
