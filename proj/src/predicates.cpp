#include "hasse/predicates.hpp"

#include <algorithm>

#include "hasse/errors.hpp"

namespace hasse {

std::vector<int> doubly_irreducibles(const lattice& l) {
  std::vector<int> out;
  for (int v = 0; v < l.size(); ++v) {
    if (l.lower_covers(v).size() == 1 && l.upper_covers(v).size() == 1) {
      out.push_back(v);
    }
  }
  return out;
}

rank_connectivity_result is_rank_connected(const lattice& l) {
  rank_connectivity_result res;
  rank_result rk = rank_function(l);
  if (!rk.ok()) {
    res.chain_a = rk.chain_a;
    res.chain_b = rk.chain_b;
    return res;
  }
  res.ranked = true;
  res.ranks = *rk.ranks;
  auto levels = rank_levels(l, res.ranks);
  for (int i = 0; i + 1 < static_cast<int>(levels.size()); ++i) {
    elem_set members(l.size());
    for (int v : levels[i]) members.set(v);
    for (int v : levels[i + 1]) members.set(v);
    auto graph = hasse_subgraph(l, members);
    if (graph.components.size() > 1) {
      res.level = i;
      res.components = graph.components;
      return res;
    }
  }
  res.ok = true;
  return res;
}

interval_connectivity_result is_interval_connected(const lattice& l,
                                                   int min_gap) {
  rank_result rk = rank_function(l);
  if (!rk.ok()) throw not_ranked_error(rk.chain_a, rk.chain_b);
  const std::vector<int>& r = *rk.ranks;

  interval_connectivity_result res;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (x == y || !l.leq(x, y) || r[y] - r[x] < min_gap) continue;
      elem_set open = l.interval_members(x, y);
      open.reset(x);
      open.reset(y);
      auto graph = hasse_subgraph(l, open);
      if (graph.components.size() > 1) {
        res.x = x;
        res.y = y;
        res.components = graph.components;
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

dismantle_result dismantling_sequence(const lattice& l) {
  // Greedy is safe: deleting a doubly irreducible element always leaves a
  // sublattice, and every sublattice of a dismantlable lattice is again
  // dismantlable, so no removal order can dead-end where another succeeds.
  dismantle_result res;
  elem_set members(l.size());
  members.set();
  while (members.count() > 2) {
    auto covers = restricted_covers(l, members);
    std::vector<int> up(l.size(), 0), down(l.size(), 0);
    for (auto& [a, b] : covers) {
      ++up[a];
      ++down[b];
    }
    int victim = -1;
    for (int v = first(members); v >= 0; v = next(members, v)) {
      if (up[v] == 1 && down[v] == 1) {
        victim = v;
        break;
      }
    }
    if (victim < 0) {
      res.stuck = to_vector(members);
      return res;
    }
    res.order.push_back(victim);
    members.reset(victim);
  }
  res.ok = true;
  return res;
}

corner_result find_corner(const lattice& l, int x) {
  if (l.lower_covers(x).size() != 1 || l.upper_covers(x).size() != 1) {
    throw not_doubly_irreducible_error(x);
  }
  corner_result res;
  res.x = x;
  res.z = l.lower_covers(x)[0];
  res.y = l.upper_covers(x)[0];
  for (int w : l.upper_covers(res.z)) {
    if (w == x) continue;
    const auto& ups = l.upper_covers(w);
    if (std::binary_search(ups.begin(), ups.end(), res.y)) {
      res.w = w;
      res.found = true;
      return res;
    }
  }
  return res;
}

namespace {

// Enumerates linear extensions sigma, maintaining the candidate order
// R = (x < y in the lattice) + (x, y incomparable and sigma places y first).
// R is total and antisymmetric by construction; it is a linear order iff it
// has no directed 3-cycle, and any new 3-cycle must pass through the element
// just placed, so one quadratic check per placement keeps the prefix clean.
struct planar_search {
  const lattice& l;
  int n;
  std::vector<int> sigma;
  std::vector<char> placed;
  std::vector<int> missing_lower;
  std::vector<char> rel;  // rel[a * n + b]: a precedes b in R

  explicit planar_search(const lattice& lat)
      : l(lat), n(lat.size()), placed(n, 0), missing_lower(n, 0),
        rel(static_cast<size_t>(n) * n, 0) {
    for (int v = 0; v < n; ++v) {
      missing_lower[v] = static_cast<int>(l.lower_covers(v).size());
    }
  }

  bool orient(int u) {
    for (int a : sigma) {
      if (l.leq(a, u)) {
        rel[a * n + u] = 1;
      } else {
        // a placed first rules out u < a, so the pair is incomparable and
        // the later element u precedes in the reversed-placement order.
        rel[u * n + a] = 1;
      }
    }
    for (int a : sigma) {
      if (!rel[a * n + u]) continue;
      for (int b : sigma) {
        if (rel[u * n + b] && !rel[a * n + b]) return false;
      }
    }
    return true;
  }

  void clear(int u) {
    for (int a : sigma) rel[a * n + u] = rel[u * n + a] = 0;
  }

  bool run() {
    if (static_cast<int>(sigma.size()) == n) return true;
    for (int u = 0; u < n; ++u) {
      if (placed[u] || missing_lower[u] > 0) continue;
      if (!orient(u)) {
        clear(u);
        continue;
      }
      placed[u] = 1;
      sigma.push_back(u);
      for (int v : l.upper_covers(u)) --missing_lower[v];
      if (run()) return true;
      for (int v : l.upper_covers(u)) ++missing_lower[v];
      sigma.pop_back();
      placed[u] = 0;
      clear(u);
    }
    return false;
  }
};

}  // namespace

planarity_result is_planar(const lattice& l, int max_n) {
  if (l.size() > max_n) throw size_limit_error("is_planar", max_n, l.size());
  planar_search search(l);
  planarity_result res;
  if (search.run()) {
    res.ok = true;
    res.sigma = search.sigma;
  }
  return res;
}

semimodularity_result is_upper_semimodular(const lattice& l) {
  semimodularity_result res;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (x == y) continue;
      int m = l.meet(x, y);
      const auto& ups = l.upper_covers(m);
      if (!std::binary_search(ups.begin(), ups.end(), x)) continue;
      int j = l.join(x, y);
      const auto& yups = l.upper_covers(y);
      if (!std::binary_search(yups.begin(), yups.end(), j)) {
        res.x = x;
        res.y = y;
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

semimodularity_result is_lower_semimodular(const lattice& l) {
  semimodularity_result res;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (x == y) continue;
      int j = l.join(x, y);
      const auto& xups = l.upper_covers(x);
      if (!std::binary_search(xups.begin(), xups.end(), j)) continue;
      int m = l.meet(x, y);
      const auto& mups = l.upper_covers(m);
      if (!std::binary_search(mups.begin(), mups.end(), y)) {
        res.x = x;
        res.y = y;
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace hasse
