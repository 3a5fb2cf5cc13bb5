#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hasse {

// Kinds of structural defects found while validating a cover relation.
enum class build_defect {
  invalid_input,    // empty ground set, out-of-range id, self-loop
  cycle_detected,   // cover digraph has a directed cycle
  redundant_cover,  // cover pair implied by a longer cover path
  multiple_minima,
  multiple_maxima,
  not_a_lattice,    // some pair has >= 2 minimal upper / maximal lower bounds
};

// Thrown by lattice::from_covers. `elements` carries the witness: a cycle
// path, the offending cover pair, the set of minima/maxima, or for
// not_a_lattice the pair x,y followed by the bound set.
struct build_error : std::runtime_error {
  build_defect defect;
  std::vector<int> elements;

  build_error(build_defect d, std::vector<int> elems, const std::string& what)
      : std::runtime_error(what), defect(d), elements(std::move(elems)) {}
};

// Two elements have no order relation where one was required.
struct not_comparable_error : std::invalid_argument {
  int x, y;
  not_comparable_error(int x_, int y_)
      : std::invalid_argument("elements " + std::to_string(x_) + " and " +
                              std::to_string(y_) + " are not comparable"),
        x(x_), y(y_) {}
};

// An operation that requires a ranked lattice was given an unranked one.
// The two chains are maximal bottom-to-top chains of different lengths.
struct not_ranked_error : std::invalid_argument {
  std::vector<int> chain_a, chain_b;
  not_ranked_error(std::vector<int> a, std::vector<int> b)
      : std::invalid_argument("lattice is not ranked"),
        chain_a(std::move(a)), chain_b(std::move(b)) {}
};

struct not_doubly_irreducible_error : std::invalid_argument {
  int x;
  explicit not_doubly_irreducible_error(int x_)
      : std::invalid_argument("element " + std::to_string(x_) +
                              " is not doubly irreducible"),
        x(x_) {}
};

// Input exceeds the configured bound of an exhaustive operation.
struct size_limit_error : std::runtime_error {
  std::string op;
  long long limit, actual;
  size_limit_error(std::string op_, long long limit_, long long actual_)
      : std::runtime_error(op_ + ": size " + std::to_string(actual_) +
                           " exceeds limit " + std::to_string(limit_)),
        op(std::move(op_)), limit(limit_), actual(actual_) {}
};

// A labeling misses a cover pair (or labels a non-cover).
struct partial_labeling_error : std::invalid_argument {
  int a, b;
  bool missing;  // false: (a,b) labeled but not a cover of the lattice
  partial_labeling_error(int a_, int b_, bool missing_)
      : std::invalid_argument(std::string(missing_ ? "missing label for"
                                                   : "label on non-cover") +
                              " (" + std::to_string(a_) + "," +
                              std::to_string(b_) + ")"),
        a(a_), b(b_), missing(missing_) {}
};

// Preconditions of a constructive algorithm do not hold for the input.
struct precondition_error : std::invalid_argument {
  std::string reason;
  explicit precondition_error(std::string reason_)
      : std::invalid_argument("precondition failed: " + reason_),
        reason(std::move(reason_)) {}
};

// The label candidate grid for a corner extension was exhausted without a
// candidate passing verification.  Defensive: the sentinel candidate pair
// satisfies the extension constraints whenever the recursive labeling is
// valid, so reaching this indicates a bug upstream.
struct extension_exhausted_error : std::runtime_error {
  int x;
  explicit extension_exhausted_error(int x_)
      : std::runtime_error("label extension search exhausted at element " +
                           std::to_string(x_)),
        x(x_) {}
};

// A cross-check implication failed; carries the offending lattice serialized
// as a cover list.  Never acceptable output: it means an implementation bug.
struct implication_violated_error : std::runtime_error {
  std::string implication;
  std::string lattice_json;
  implication_violated_error(std::string impl, std::string lat,
                             const std::string& what)
      : std::runtime_error(what),
        implication(std::move(impl)), lattice_json(std::move(lat)) {}
};

}  // namespace hasse
