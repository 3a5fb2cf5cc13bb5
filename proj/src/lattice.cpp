#include "hasse/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace hasse {

std::vector<int> to_vector(const elem_set& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (int i = first(s); i >= 0; i = next(s, i)) out.push_back(i);
  return out;
}

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Minimal elements of `s`: members with no other member strictly below.
std::vector<int> minimal_of(const std::vector<elem_set>& down, const elem_set& s) {
  std::vector<int> out;
  for (int c = first(s); c >= 0; c = next(s, c)) {
    if ((down[c] & s).count() == 1) out.push_back(c);
  }
  return out;
}

std::vector<int> maximal_of(const std::vector<elem_set>& up, const elem_set& s) {
  std::vector<int> out;
  for (int c = first(s); c >= 0; c = next(s, c)) {
    if ((up[c] & s).count() == 1) out.push_back(c);
  }
  return out;
}

}  // namespace

lattice lattice::from_covers(const std::vector<cover_pair>& covers) {
  int n = 1;
  for (auto& [a, b] : covers) n = std::max({n, a + 1, b + 1});
  return from_covers(n, covers);
}

lattice lattice::from_covers(int n, const std::vector<cover_pair>& covers) {
  if (n <= 0) {
    throw build_error(build_defect::invalid_input, {},
                      "ground set must be non-empty");
  }
  lattice l;
  l.n_ = n;
  l.covers_ = covers;
  std::sort(l.covers_.begin(), l.covers_.end());
  l.up_adj_.assign(n, {});
  l.down_adj_.assign(n, {});
  std::set<cover_pair> seen;
  for (auto& [a, b] : l.covers_) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw build_error(build_defect::invalid_input, {a, b},
                        "cover " + pair_str(a, b) + " out of range");
    }
    if (a == b) {
      throw build_error(build_defect::invalid_input, {a, b},
                        "self-loop cover " + pair_str(a, b));
    }
    if (!seen.insert({a, b}).second) {
      throw build_error(build_defect::redundant_cover, {a, b},
                        "duplicate cover " + pair_str(a, b));
    }
    l.up_adj_[a].push_back(b);
    l.down_adj_[b].push_back(a);
  }

  // Topological order; leftover in-degrees witness a cycle.
  std::vector<int> indeg(n, 0), topo;
  for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(l.down_adj_[v].size());
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) topo.push_back(v);
  }
  for (size_t i = 0; i < topo.size(); ++i) {
    for (int c : l.up_adj_[topo[i]]) {
      if (--indeg[c] == 0) topo.push_back(c);
    }
  }
  if (static_cast<int>(topo.size()) != n) {
    // Every unprocessed node keeps an unprocessed lower cover, so walking
    // downward among them must revisit a node; that closes a cycle.
    int start = 0;
    while (indeg[start] == 0) ++start;
    std::vector<int> path;
    std::vector<int> pos(n, -1);
    int v = start;
    while (pos[v] < 0) {
      pos[v] = static_cast<int>(path.size());
      path.push_back(v);
      for (int c : l.down_adj_[v]) {
        if (indeg[c] > 0) {
          v = c;
          break;
        }
      }
    }
    std::vector<int> cycle(path.begin() + pos[v], path.end());
    std::reverse(cycle.begin(), cycle.end());
    std::string what = "cycle:";
    for (int e : cycle) what += " " + std::to_string(e);
    throw build_error(build_defect::cycle_detected, cycle, what);
  }

  l.up_.assign(n, elem_set(n));
  l.down_.assign(n, elem_set(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    l.up_[v].set(v);
    for (int c : l.up_adj_[v]) l.up_[v] |= l.up_[c];
  }
  for (int v : topo) {
    l.down_[v].set(v);
    for (int c : l.down_adj_[v]) l.down_[v] |= l.down_[c];
  }

  // A cover is redundant iff a longer path joins its endpoints.
  for (auto& [a, b] : l.covers_) {
    if ((l.up_[a] & l.down_[b]).count() > 2) {
      throw build_error(build_defect::redundant_cover, {a, b},
                        "cover " + pair_str(a, b) + " implied by transitivity");
    }
  }

  // Pairwise bound uniqueness, pairs in lex order.  An empty bound set means
  // the poset lacks a top (resp. bottom); two or more means no lattice.
  l.meet_.assign(static_cast<size_t>(n) * n, -1);
  l.join_.assign(static_cast<size_t>(n) * n, -1);
  elem_set all(n);
  all.set();
  for (int x = 0; x < n; ++x) {
    l.meet_[l.idx(x, x)] = x;
    l.join_[l.idx(x, x)] = x;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      elem_set uppers = l.up_[x] & l.up_[y];
      std::vector<int> lub = minimal_of(l.down_, uppers);
      if (lub.empty()) {
        std::vector<int> maxima = maximal_of(l.up_, all);
        throw build_error(build_defect::multiple_maxima, maxima,
                          "no common upper bound for " + pair_str(x, y));
      }
      if (lub.size() > 1) {
        std::vector<int> witness = {x, y};
        witness.insert(witness.end(), lub.begin(), lub.end());
        throw build_error(build_defect::not_a_lattice, witness,
                          "elements " + pair_str(x, y) + " have " +
                              std::to_string(lub.size()) +
                              " minimal upper bounds");
      }
      elem_set lowers = l.down_[x] & l.down_[y];
      std::vector<int> glb = maximal_of(l.up_, lowers);
      if (glb.empty()) {
        std::vector<int> minima = minimal_of(l.down_, all);
        throw build_error(build_defect::multiple_minima, minima,
                          "no common lower bound for " + pair_str(x, y));
      }
      if (glb.size() > 1) {
        std::vector<int> witness = {x, y};
        witness.insert(witness.end(), glb.begin(), glb.end());
        throw build_error(build_defect::not_a_lattice, witness,
                          "elements " + pair_str(x, y) + " have " +
                              std::to_string(glb.size()) +
                              " maximal lower bounds");
      }
      l.join_[l.idx(x, y)] = l.join_[l.idx(y, x)] = lub[0];
      l.meet_[l.idx(x, y)] = l.meet_[l.idx(y, x)] = glb[0];
    }
  }

  for (int v = 0; v < n; ++v) {
    if (l.down_[v].count() == 1) l.bottom_ = v;
    if (l.up_[v].count() == 1) l.top_ = v;
    std::sort(l.up_adj_[v].begin(), l.up_adj_[v].end());
    std::sort(l.down_adj_[v].begin(), l.down_adj_[v].end());
  }

  l.height_.assign(n, 0);
  for (int v : topo) {
    for (int c : l.down_adj_[v]) {
      l.height_[v] = std::max(l.height_[v], l.height_[c] + 1);
    }
  }
  return l;
}

elem_set lattice::interval_members(int lo, int hi) const {
  if (!leq(lo, hi)) throw not_comparable_error(lo, hi);
  return up_[lo] & down_[hi];
}

rank_result rank_function(const lattice& l) {
  int n = l.size();
  // Longest-path distances up from bottom and down from top, with argmax
  // neighbors for witness extraction (smallest id on ties).
  std::vector<int> hup(n, 0), succ(n, -1), pred(n, -1);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return l.height(a) < l.height(b); });
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int c : l.upper_covers(*it)) {
      if (succ[*it] < 0 || hup[c] + 1 > hup[*it]) {
        hup[*it] = hup[c] + 1;
        succ[*it] = c;
      }
    }
  }
  // pred follows a longest chain down from v (smallest id on ties).
  for (int v : order) {
    for (int c : l.lower_covers(v)) {
      if (l.height(c) + 1 == l.height(v)) {
        pred[v] = c;
        break;
      }
    }
  }

  auto chain_through = [&](int a, int b) {
    std::vector<int> chain;
    for (int v = a; v >= 0; v = pred[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    if (b >= 0) {
      for (int v = b; v >= 0; v = succ[v]) chain.push_back(v);
    }
    return chain;
  };

  for (auto& [a, b] : l.covers()) {
    if (l.height(b) != l.height(a) + 1) {
      // Splicing the longest path to `a` through this cover and the longest
      // path to `b` directly yields maximal chains of different lengths.
      rank_result r;
      r.chain_a = chain_through(a, b);
      r.chain_b = chain_through(b, succ[b]);
      return r;
    }
  }
  rank_result r;
  std::vector<int> ranks(n);
  for (int v = 0; v < n; ++v) ranks[v] = l.height(v);
  r.ranks = std::move(ranks);
  return r;
}

std::vector<std::vector<int>> rank_levels(const lattice& l,
                                          const std::vector<int>& ranks) {
  int top_rank = 0;
  for (int v = 0; v < l.size(); ++v) top_rank = std::max(top_rank, ranks[v]);
  std::vector<std::vector<int>> levels(top_rank + 1);
  for (int v = 0; v < l.size(); ++v) levels[ranks[v]].push_back(v);
  return levels;
}

int sub_lattice::compact_of(int original_id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), original_id);
  if (it == ids.end() || *it != original_id) return -1;
  return static_cast<int>(it - ids.begin());
}

std::vector<cover_pair> restricted_covers(const lattice& l,
                                          const elem_set& members) {
  std::vector<cover_pair> out;
  for (int u = first(members); u >= 0; u = next(members, u)) {
    for (int v = first(members); v >= 0; v = next(members, v)) {
      if (u == v || !l.leq(u, v)) continue;
      elem_set between = l.up_set(u) & l.down_set(v) & members;
      if (between.count() == 2) out.push_back({u, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

sub_lattice induced_lattice(const lattice& l, const elem_set& members) {
  sub_lattice s;
  s.ids = to_vector(members);
  std::vector<int> compact(l.size(), -1);
  for (size_t k = 0; k < s.ids.size(); ++k) compact[s.ids[k]] = static_cast<int>(k);
  std::vector<cover_pair> covers;
  for (auto& [a, b] : restricted_covers(l, members)) {
    covers.push_back({compact[a], compact[b]});
  }
  s.lat = lattice::from_covers(static_cast<int>(s.ids.size()), covers);
  return s;
}

sub_lattice interval(const lattice& l, int lo, int hi) {
  return induced_lattice(l, l.interval_members(lo, hi));
}

delete_result delete_elements(const lattice& l, const std::vector<int>& removed) {
  elem_set keep(l.size());
  keep.set();
  for (int v : removed) {
    if (v < 0 || v >= l.size()) {
      throw std::invalid_argument("delete_elements: id " + std::to_string(v) +
                                  " out of range");
    }
    if (v == l.bottom() || v == l.top()) {
      throw std::invalid_argument(
          "delete_elements: cannot remove bottom or top");
    }
    keep.reset(v);
  }
  delete_result r;
  r.kept = to_vector(keep);
  r.covers = restricted_covers(l, keep);
  r.is_sublattice = true;
  for (size_t i = 0; i < r.kept.size() && r.is_sublattice; ++i) {
    for (size_t j = i + 1; j < r.kept.size(); ++j) {
      if (!keep.test(l.meet(r.kept[i], r.kept[j])) ||
          !keep.test(l.join(r.kept[i], r.kept[j]))) {
        r.is_sublattice = false;
        break;
      }
    }
  }
  return r;
}

subgraph_report hasse_subgraph(const lattice& l, const elem_set& members) {
  subgraph_report rep;
  rep.vertices = to_vector(members);
  std::vector<std::vector<int>> adj(l.size());
  for (auto& [a, b] : l.covers()) {
    if (members.test(a) && members.test(b)) {
      rep.edges.push_back({a, b});
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  elem_set pending = members;
  while (pending.any()) {
    int seed = first(pending);
    std::vector<int> comp = {seed};
    pending.reset(seed);
    for (size_t i = 0; i < comp.size(); ++i) {
      for (int w : adj[comp[i]]) {
        if (pending.test(w)) {
          pending.reset(w);
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    rep.components.push_back(std::move(comp));
  }
  return rep;
}

namespace {

// Stable color refinement over (height, up-degree, down-degree) and cover
// neighborhood color multisets.  Color order is relabeling-invariant because
// new colors are assigned by sorted key.
std::vector<int> refine_colors(const lattice& l) {
  int n = l.size();
  std::vector<int> color(n);
  {
    std::vector<std::tuple<int, int, int>> key(n);
    std::map<std::tuple<int, int, int>, int> dense;
    for (int v = 0; v < n; ++v) {
      key[v] = {l.height(v), static_cast<int>(l.upper_covers(v).size()),
                static_cast<int>(l.lower_covers(v).size())};
      dense[key[v]] = 0;
    }
    int c = 0;
    for (auto& [k, id] : dense) id = c++;
    for (int v = 0; v < n; ++v) color[v] = dense[key[v]];
  }
  while (true) {
    using refine_key = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<refine_key> key(n);
    std::map<refine_key, int> dense;
    for (int v = 0; v < n; ++v) {
      std::vector<int> down_cols, up_cols;
      for (int c : l.lower_covers(v)) down_cols.push_back(color[c]);
      for (int c : l.upper_covers(v)) up_cols.push_back(color[c]);
      std::sort(down_cols.begin(), down_cols.end());
      std::sort(up_cols.begin(), up_cols.end());
      key[v] = {color[v], std::move(down_cols), std::move(up_cols)};
      dense[key[v]] = 0;
    }
    int c = 0;
    for (auto& [k, id] : dense) id = c++;
    std::vector<int> refined(n);
    for (int v = 0; v < n; ++v) refined[v] = dense[key[v]];
    if (refined == color) return color;
    color = std::move(refined);
  }
}

struct canon_search {
  const lattice* l;
  std::vector<std::vector<int>> cells;  // element ids per color, ascending
  std::vector<int> cell_of_pos;         // which cell fills output position k
  std::vector<int> assigned;            // new id -> original id
  std::vector<bool> used;
  std::vector<std::string> cols, best;
  bool have_best = false;
  long best_gen = 0;

  // Column k encodes cover bits against already-placed elements; comparing
  // columns in order realizes lexicographic comparison of the relabeled
  // upper-triangular cover matrix.
  std::string column(int k, int orig) const {
    std::string bits((k + 7) / 8, '\0');
    for (int j = 0; j < k; ++j) {
      int o = assigned[j];
      bool edge = l->leq(o, orig)
                      ? std::binary_search(l->upper_covers(o).begin(),
                                           l->upper_covers(o).end(), orig)
                      : false;
      if (edge) bits[j / 8] = static_cast<char>(bits[j / 8] | (1 << (j % 8)));
    }
    return bits;
  }

  // state: 0 = equal to best prefix, -1 = already strictly smaller.  When a
  // descendant replaces best, the new best shares this node's prefix, so
  // remaining siblings compare against it with an equal prefix again.
  void run(int k, int state) {
    int n = l->size();
    if (k == n) {
      if (!have_best || state < 0) {
        best = cols;
        have_best = true;
        ++best_gen;
      }
      return;
    }
    for (int orig : cells[cell_of_pos[k]]) {
      if (used[orig]) continue;
      std::string col = column(k, orig);
      int next_state = state;
      if (have_best && state == 0) {
        if (col > best[k]) continue;
        if (col < best[k]) next_state = -1;
      }
      used[orig] = true;
      assigned[k] = orig;
      cols[k] = std::move(col);
      long gen = best_gen;
      run(k + 1, next_state);
      if (best_gen != gen) state = 0;
      used[orig] = false;
    }
  }
};

}  // namespace

std::string canonical_form(const lattice& l) {
  int n = l.size();
  std::vector<int> color = refine_colors(l);
  int ncolors = *std::max_element(color.begin(), color.end()) + 1;
  canon_search s;
  s.l = &l;
  s.cells.assign(ncolors, {});
  for (int v = 0; v < n; ++v) s.cells[color[v]].push_back(v);
  for (int c = 0; c < ncolors; ++c) {
    for (size_t i = 0; i < s.cells[c].size(); ++i) s.cell_of_pos.push_back(c);
  }
  s.assigned.assign(n, -1);
  s.used.assign(n, false);
  s.cols.assign(n, "");
  s.run(0, 0);

  std::string out = "L" + std::to_string(n) + ";";
  for (auto& col : s.best) out += col;
  return out;
}

}  // namespace hasse
