#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasse/errors.hpp"

namespace hasse {

using elem_set = boost::dynamic_bitset<>;
using cover_pair = std::pair<int, int>;

// Iterate set bits: for (int i = first(s); i >= 0; i = next(s, i)) ...
inline int first(const elem_set& s) {
  auto p = s.find_first();
  return p == elem_set::npos ? -1 : static_cast<int>(p);
}
inline int next(const elem_set& s, int i) {
  auto p = s.find_next(static_cast<size_t>(i));
  return p == elem_set::npos ? -1 : static_cast<int>(p);
}
std::vector<int> to_vector(const elem_set& s);

// Finite lattice over dense element ids 0..n-1, stored as its Hasse diagram
// plus transitive-closure bitsets and full meet/join tables.  Instances are
// immutable after construction and validated: from_covers rejects cycles,
// redundant covers, multiple minima/maxima and non-lattice orders, each with
// an explicit witness in the thrown build_error.
class lattice {
 public:
  lattice() = default;  // empty placeholder; real instances via from_covers

  // `n` is the ground set size; n=1 with no covers is the trivial lattice.
  static lattice from_covers(int n, const std::vector<cover_pair>& covers);
  // Convenience: n inferred as 1 + max id mentioned.
  static lattice from_covers(const std::vector<cover_pair>& covers);

  int size() const { return n_; }
  const std::vector<cover_pair>& covers() const { return covers_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return up_[x].test(y); }
  int meet(int x, int y) const { return meet_[idx(x, y)]; }
  int join(int x, int y) const { return join_[idx(x, y)]; }

  const std::vector<int>& upper_covers(int x) const { return up_adj_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_adj_[x]; }
  const elem_set& up_set(int x) const { return up_[x]; }      // includes x
  const elem_set& down_set(int x) const { return down_[x]; }  // includes x

  // Longest chain from bottom; equals the rank when the lattice is ranked.
  int height(int x) const { return height_[x]; }

  // {e : lo <= e <= hi}; throws not_comparable_error unless lo <= hi.
  elem_set interval_members(int lo, int hi) const;

 private:
  size_t idx(int x, int y) const {
    return static_cast<size_t>(x) * n_ + y;
  }

  int n_ = 0;
  int bottom_ = -1, top_ = -1;
  std::vector<cover_pair> covers_;
  std::vector<std::vector<int>> up_adj_, down_adj_;
  std::vector<elem_set> up_, down_;
  std::vector<int> meet_, join_;
  std::vector<int> height_;
};

// Rank function: defined iff all maximal bottom-to-top chains have equal
// length.  On failure carries two maximal chains of different lengths.
struct rank_result {
  std::optional<std::vector<int>> ranks;
  std::vector<int> chain_a, chain_b;  // witness when !ranks
  bool ok() const { return ranks.has_value(); }
};
rank_result rank_function(const lattice& l);

// Elements of rank r, for r = 0..rank(top); requires a ranked lattice.
std::vector<std::vector<int>> rank_levels(const lattice& l,
                                          const std::vector<int>& ranks);

// Closed interval [lo,hi] reinterpreted as a lattice of its own.
// `ids[k]` is the original id of the interval's element k.
struct sub_lattice {
  lattice lat;
  std::vector<int> ids;
  int compact_of(int original_id) const;  // -1 if absent
};
sub_lattice interval(const lattice& l, int lo, int hi);
// Same compaction for an arbitrary member set that forms a lattice.
sub_lattice induced_lattice(const lattice& l, const elem_set& members);

// Covers of the subposet induced by `members`, in original ids.  A pair is
// a cover iff no member sits strictly between (covers can appear that the
// ambient lattice lacks).
std::vector<cover_pair> restricted_covers(const lattice& l,
                                          const elem_set& members);

// Induced subposet after removing `removed` (bottom/top must stay).
// Covers are recomputed from the restricted order and keep original ids.
struct delete_result {
  std::vector<int> kept;                 // ascending original ids
  std::vector<cover_pair> covers;        // original ids
  bool is_sublattice;                    // closed under meet and join
};
delete_result delete_elements(const lattice& l, const std::vector<int>& removed);

// Undirected Hasse edges among `members`, with connected components
// (components ordered by smallest member, each sorted ascending).
struct subgraph_report {
  std::vector<int> vertices;
  std::vector<cover_pair> edges;
  std::vector<std::vector<int>> components;
};
subgraph_report hasse_subgraph(const lattice& l, const elem_set& members);

// Isomorphism-invariant byte string: equal strings iff isomorphic lattices.
// Canonical relabeling found by color refinement over (height, up-degree,
// down-degree) followed by backtracking over color-respecting relabelings.
std::string canonical_form(const lattice& l);

}  // namespace hasse
