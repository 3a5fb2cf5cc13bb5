#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hasse/lattice.hpp"

namespace hasse {

// One named workbench lattice together with the structural claims it is
// expected to satisfy.  Claims name predicates by the identifiers the
// command line uses, so they replay through evaluate_claim verbatim.
struct fixture_claim {
  std::string predicate;
  bool expected;
};

struct fixture {
  std::string name;
  lattice lat;
  std::vector<fixture_claim> claims;
};

const std::vector<std::string>& fixture_names();  // {"f1a","f1b","f1c","f1d"}
// Throws precondition_error for an unknown name.
fixture get_fixture(const std::string& name);

// Evaluates one claim predicate on any lattice: "ranked", "rank_connected",
// "interval_connected" (gap two or more), "dismantlable", "planar",
// "upper_semimodular", "lower_semimodular", "el_shellable", "admissible".
// "el_shellable" constructs a labeling when the constructive route applies
// and otherwise falls back to the exhaustive search (size_limit_error past
// its cover bound).  Unknown predicates throw precondition_error.
bool evaluate_claim(const lattice& l, const std::string& predicate);

// Short class descriptor used in corpus summaries: "chain", "diamond", or
// "c<covers>h<height>" for everything else.
std::string shape_name(const lattice& l);

// Streams one representative per isomorphism class of lattices with exactly
// n elements, in a fixed discovery order.  Representatives are grown one
// element at a time along a linear extension: each new element picks an
// antichain of lower covers, prefixes keep all pairwise meets defined, and
// the final element must close the order with a top.  Returns the number of
// classes visited; a false-returning visitor stops the stream early.
// Bounds: 1 <= n (precondition_error) and n <= 10 (size_limit_error).
long long enumerate_lattices(int n,
                             const std::function<bool(const lattice&)>& visit);

// A randomly grown dismantlable lattice: starting from the 2-chain, each
// new element is inserted as a doubly irreducible, either subdividing an
// existing cover or doubling the middle of an existing two-step path.
// `certificate` lists elements in reverse insertion order; deleting them
// front to back always removes a doubly irreducible element of the current
// subposet.  Deterministic for a fixed seed; needs n >= 2.
struct random_lattice {
  lattice lat;
  std::vector<int> certificate;
};
random_lattice random_dismantlable(int n, unsigned long long seed);

// Aggregate counts from a cross-check run over a stream of lattices.
struct cross_check_report {
  long long lattices = 0;
  // Ranked lattices with every proper interval of gap >= 2 connected; each
  // must turn out rank-connected.
  long long interval_connected_checked = 0;
  // Rank-connected dismantlable lattices; each must yield a constructed
  // labeling that the verifier accepts.
  long long labelings_constructed = 0;
  // Rank-connected lattices that are not interval-connected: witnesses that
  // the connectivity implication cannot be reversed.
  long long rank_not_interval = 0;
  // Admissible lattices with a confirmed edge labeling, versus admissible
  // ones whose confirmation is out of reach (too many covers for the
  // exhaustive search, or no rank function).
  long long admissible_confirmed = 0;
  long long admissible_unchecked = 0;
  // Lattices whose admissibility itself was skipped (join-irreducible bound).
  long long admissibility_skipped = 0;
};

// Incrementally validates the implication battery over a stream of
// lattices, emitting one structured record per lattice to `records` when a
// stream is given.  Checked implications: interval-connected implies
// rank-connected; rank-connected and dismantlable implies a verified
// constructed labeling; planar implies dismantlable; admissible implies an
// edge labeling exists (confirmed exhaustively when within bounds).  Any
// failure throws implication_violated_error carrying the offending lattice;
// a feed run that completes certifies the batch.
class cross_checker {
 public:
  explicit cross_checker(std::ostream* records = nullptr)
      : records_(records) {}
  void feed(const lattice& l);
  const cross_check_report& report() const { return report_; }

 private:
  std::ostream* records_;
  cross_check_report report_;
};

cross_check_report cross_check(const std::vector<lattice>& batch,
                               std::ostream* records = nullptr);

}  // namespace hasse
