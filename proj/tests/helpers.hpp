#pragma once

// Shared fixture cover lists and small brute-force oracles for tests.  The
// oracles work straight off cover lists with their own closure computation,
// independent of the library's internals.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

using covers_t = std::vector<std::pair<int, int>>;

inline int max_id(const covers_t& cs) {
  int n = 0;
  for (auto& [a, b] : cs) n = std::max({n, a, b});
  return n;
}

// Reflexive-transitive closure of the cover relation as a dense matrix.
inline std::vector<std::vector<bool>> brute_leq(const covers_t& cs, int n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) le[v][v] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [a, b] : cs) {
      for (int v = 0; v < n; ++v) {
        if (le[v][a] && !le[v][b]) {
          le[v][b] = true;
          changed = true;
        }
      }
    }
  }
  return le;
}

// Minimal common upper bounds of x,y under the closure (dual for lower).
inline std::vector<int> brute_min_uppers(const std::vector<std::vector<bool>>& le,
                                         int x, int y) {
  int n = static_cast<int>(le.size());
  std::vector<int> cand;
  for (int z = 0; z < n; ++z) {
    if (le[x][z] && le[y][z]) cand.push_back(z);
  }
  std::vector<int> out;
  for (int z : cand) {
    bool minimal = true;
    for (int w : cand) {
      if (w != z && le[w][z]) minimal = false;
    }
    if (minimal) out.push_back(z);
  }
  return out;
}

inline std::vector<int> brute_max_lowers(const std::vector<std::vector<bool>>& le,
                                         int x, int y) {
  int n = static_cast<int>(le.size());
  std::vector<int> cand;
  for (int z = 0; z < n; ++z) {
    if (le[z][x] && le[z][y]) cand.push_back(z);
  }
  std::vector<int> out;
  for (int z : cand) {
    bool maximal = true;
    for (int w : cand) {
      if (w != z && le[z][w]) maximal = false;
    }
    if (maximal) out.push_back(z);
  }
  return out;
}

// All maximal bottom-to-top chains as vertex paths along covers.
inline std::vector<std::vector<int>> brute_maximal_chains(const covers_t& cs,
                                                          int n) {
  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (auto& [a, b] : cs) {
    up[a].push_back(b);
    ++indeg[b];
  }
  int bottom = 0;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) bottom = v;
  }
  std::vector<std::vector<int>> chains;
  std::vector<int> path = {bottom};
  auto dfs = [&](auto&& self, int v) -> void {
    if (up[v].empty()) {
      chains.push_back(path);
      return;
    }
    for (int c : up[v]) {
      path.push_back(c);
      self(self, c);
      path.pop_back();
    }
  };
  dfs(dfs, bottom);
  return chains;
}

// --- fixture cover lists (ids assigned bottom-up, left-to-right) ---

// 16 elements: 0; atoms 1..5; middles 6..10; coatoms 11..14; top 15.
inline covers_t f1a_covers() {
  covers_t cs;
  for (int i = 0; i < 5; ++i) cs.push_back({0, 1 + i});
  for (int i = 0; i < 5; ++i) cs.push_back({1 + i, 6 + i});
  cs.push_back({2, 8});
  cs.push_back({3, 9});
  cs.push_back({4, 10});
  cs.push_back({5, 6});
  for (int i = 0; i < 4; ++i) {
    cs.push_back({6 + i, 11 + i});
    cs.push_back({7 + i, 11 + i});
  }
  for (int i = 0; i < 4; ++i) cs.push_back({11 + i, 15});
  return cs;
}

inline covers_t f1b_covers() {
  return {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5},
          {2, 6}, {2, 7}, {3, 8}, {4, 8}, {4, 9}, {5, 9},
          {6, 9}, {6, 10}, {7, 10}, {8, 11}, {9, 11}, {10, 11}};
}

inline covers_t f1c_covers() {
  return {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5},
          {3, 6}, {4, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 9},
          {7, 9}, {7, 10}, {8, 10}, {9, 11}, {10, 11}};
}

// 9 elements: 0; atoms 1,2,3; coatoms 4..7; top 8.
inline covers_t f1d_covers() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 6}, {2, 5},
          {2, 6}, {3, 6}, {3, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
}

// Boolean lattice on 3 atoms; element id = subset bitmask.
inline covers_t b3_covers() {
  covers_t cs;
  for (int s = 0; s < 8; ++s) {
    for (int b = 0; b < 3; ++b) {
      if (!(s & (1 << b))) cs.push_back({s, s | (1 << b)});
    }
  }
  return cs;
}

inline covers_t diamond_covers() { return {{0, 1}, {0, 2}, {1, 3}, {2, 3}}; }

inline covers_t chain_covers(int n) {
  covers_t cs;
  for (int i = 0; i + 1 < n; ++i) cs.push_back({i, i + 1});
  return cs;
}

// 0, atoms 1..k, top k+1.
inline covers_t mk_covers(int k) {
  covers_t cs;
  for (int i = 1; i <= k; ++i) {
    cs.push_back({0, i});
    cs.push_back({i, k + 1});
  }
  return cs;
}

// Pentagon N_5: chain 0 < 1 < 2 < 4 beside chain 0 < 3 < 4 (unranked).
inline covers_t pentagon_covers() {
  return {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
}

// Two 3-chains 0 < 1 < 2 < 5 and 0 < 3 < 4 < 5 glued at both ends; ranked
// but the middle levels split into two components.
inline covers_t parallel_chains_covers() {
  return {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
}

inline covers_t apply_perm(const covers_t& cs, const std::vector<int>& perm) {
  covers_t out;
  for (auto& [a, b] : cs) out.push_back({perm[a], perm[b]});
  return out;
}

// Lattice isomorphism classes among all posets on n points, counted the
// slow way: every transitively closed subset of the strict upper-triangular
// pairs is a poset (any poset relabels into that form), lattice-ness is a
// pairwise bound check on the closure, and classes collapse under the
// lexicographically least relation matrix over all relabelings.
inline int brute_lattice_count(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pos.push_back({i, j});
  }
  std::set<std::string> classes;
  for (int rel = 0; rel < (1 << pos.size()); ++rel) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) le[v][v] = true;
    for (size_t p = 0; p < pos.size(); ++p) {
      if (rel & (1 << p)) le[pos[p].first][pos[p].second] = true;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        for (int c = 0; c < n && ok; ++c) {
          if (le[a][b] && le[b][c] && !le[a][c]) ok = false;
        }
      }
    }
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) {
        if (brute_min_uppers(le, x, y).size() != 1 ||
            brute_max_lowers(le, x, y).size() != 1)
          ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      std::string enc(n * n, '0');
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (le[a][b]) enc[perm[a] * n + perm[b]] = '1';
        }
      }
      if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

}  // namespace testutil
