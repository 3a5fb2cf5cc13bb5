#include "hasse/shelling.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "hasse/errors.hpp"
#include "hasse/predicates.hpp"

namespace hasse {

namespace {

const rational& label_of(const edge_labeling& f, int a, int b) {
  auto it = f.find({a, b});
  if (it == f.end()) throw partial_labeling_error(a, b, true);
  return it->second;
}

// Depth-first collection of weakly rising maximal chains toward `target`
// inside `members`, covers visited in (label, id) order.  cap > 0 stops
// after that many chains (two suffice to refute uniqueness).
struct rising_dfs {
  const lattice& l;
  const edge_labeling& f;
  const elem_set& members;
  int target;
  int cap;
  std::vector<int> path;
  std::vector<std::vector<int>> out;

  void run(int cur, const rational* floor_label) {
    if (cur == target) {
      out.push_back(path);
      return;
    }
    std::vector<std::pair<rational, int>> nexts;
    for (int v : l.upper_covers(cur)) {
      if (!members.test(v)) continue;
      const rational& lab = label_of(f, cur, v);
      if (floor_label && lab < *floor_label) continue;
      nexts.push_back({lab, v});
    }
    std::sort(nexts.begin(), nexts.end());
    for (auto& [lab, v] : nexts) {
      if (cap > 0 && static_cast<int>(out.size()) >= cap) return;
      path.push_back(v);
      run(v, &lab);
      path.pop_back();
    }
  }
};

struct interval_violation {
  el_defect defect = el_defect::none;
  std::vector<int> chain1, chain2;
  int first_step = -1;
  int competitor = -1;
};

// Both shellability conditions on a single interval [x, y].
interval_violation check_one_interval(const lattice& l,
                                      const edge_labeling& f, int x, int y) {
  elem_set members = l.interval_members(x, y);
  rising_dfs dfs{l, f, members, y, 2, {x}, {}};
  dfs.run(x, nullptr);
  interval_violation v;
  if (dfs.out.empty()) {
    v.defect = el_defect::no_rising_chain;
    return v;
  }
  if (dfs.out.size() > 1) {
    v.defect = el_defect::multiple_rising_chains;
    v.chain1 = dfs.out[0];
    v.chain2 = dfs.out[1];
    return v;
  }
  const std::vector<int>& chain = dfs.out[0];
  int x1 = chain[1];
  const rational& base = label_of(f, x, x1);
  for (int z : l.upper_covers(x)) {
    if (z == x1 || !members.test(z)) continue;
    if (!(base < label_of(f, x, z))) {
      v.defect = el_defect::not_lex_first;
      v.chain1 = chain;
      v.first_step = x1;
      v.competitor = z;
      return v;
    }
  }
  return v;
}

}  // namespace

std::vector<std::vector<int>> rising_chains(const lattice& l,
                                            const edge_labeling& f, int x,
                                            int y) {
  elem_set members = l.interval_members(x, y);
  rising_dfs dfs{l, f, members, y, 0, {x}, {}};
  dfs.run(x, nullptr);
  return dfs.out;
}

el_verdict verify_el(const lattice& l, const edge_labeling& f) {
  rank_result rk = rank_function(l);
  if (!rk.ok()) throw precondition_error("lattice is not ranked");
  const auto& cs = l.covers();
  for (const auto& c : cs) {
    if (!f.count(c)) throw partial_labeling_error(c.first, c.second, true);
  }
  for (const auto& [c, lab] : f) {
    if (!std::binary_search(cs.begin(), cs.end(), c)) {
      throw partial_labeling_error(c.first, c.second, false);
    }
  }

  const std::vector<int>& r = *rk.ranks;
  std::vector<int> order(l.size());
  for (int v = 0; v < l.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::pair(r[a], a) < std::pair(r[b], b); });

  el_verdict verdict;
  for (int x : order) {
    for (int y = 0; y < l.size(); ++y) {
      // intervals of rank gap <= 1 are single covers or points: both
      // conditions hold vacuously
      if (x == y || !l.leq(x, y) || r[y] - r[x] < 2) continue;
      interval_violation v = check_one_interval(l, f, x, y);
      if (v.defect == el_defect::none) continue;
      verdict.defect = v.defect;
      verdict.x = x;
      verdict.y = y;
      verdict.chain1 = std::move(v.chain1);
      verdict.chain2 = std::move(v.chain2);
      verdict.first_step = v.first_step;
      verdict.competitor = v.competitor;
      return verdict;
    }
  }
  verdict.ok = true;
  return verdict;
}

namespace {

edge_labeling remap(const edge_labeling& g, const std::vector<int>& ids) {
  edge_labeling f;
  for (const auto& [c, lab] : g) f[{ids[c.first], ids[c.second]}] = lab;
  return f;
}

rational distance(const rational& a, const rational& b) {
  return a < b ? b - a : a - b;
}

// Re-checks only the intervals that gained the element x; every other
// interval of the lattice is untouched by the insertion.
bool intervals_around_pass(const lattice& l, const edge_labeling& f, int x) {
  for (int a = 0; a < l.size(); ++a) {
    if (!l.leq(a, x)) continue;
    for (int b = 0; b < l.size(); ++b) {
      if (a == b || !l.leq(x, b)) continue;
      if (l.height(b) - l.height(a) < 2) continue;
      if (check_one_interval(l, f, a, b).defect != el_defect::none) {
        return false;
      }
    }
  }
  return true;
}

edge_labeling build_labeling(const lattice& l) {
  edge_labeling f;
  if (l.size() <= 1) return f;
  if (l.size() == 2) {
    f[{l.bottom(), l.top()}] = rational(1);
    return f;
  }

  rank_result rk = rank_function(l);
  if (!rk.ok()) throw precondition_error("lattice is not ranked");
  const std::vector<int>& r = *rk.ranks;
  int top_rank = r[l.top()];
  auto levels = rank_levels(l, r);

  // a single element in a middle rank splits the lattice into two stacked
  // blocks; the upper block's labels are offset strictly above the lower's
  for (int i = 1; i < top_rank; ++i) {
    if (levels[i].size() != 1) continue;
    int pivot = levels[i][0];
    auto low = interval(l, l.bottom(), pivot);
    auto high = interval(l, pivot, l.top());
    edge_labeling gl = remap(build_labeling(low.lat), low.ids);
    edge_labeling gh = remap(build_labeling(high.lat), high.ids);
    rational low_max = gl.begin()->second;
    for (const auto& [c, lab] : gl) low_max = std::max(low_max, lab);
    rational high_min = gh.begin()->second;
    for (const auto& [c, lab] : gh) high_min = std::min(high_min, lab);
    rational offset = low_max - high_min + rational(1);
    f = std::move(gl);
    for (const auto& [c, lab] : gh) f[c] = lab + offset;
    return f;
  }

  // fan labeling for the rank-2 base case: the unique rising chain runs
  // through the smallest atom, every other atom is labeled strictly higher
  if (top_rank == 2) {
    const auto& atoms = levels[1];
    for (size_t i = 0; i < atoms.size(); ++i) {
      f[{l.bottom(), atoms[i]}] = rational(static_cast<long long>(i) + 1);
      f[{atoms[i], l.top()}] = rational(1);
    }
    return f;
  }

  // otherwise remove a doubly irreducible element beside a corner, label
  // the remainder, and grid-search the two missing labels; the search is
  // seeded next to the corner's labels and bracketed by values beyond the
  // label range, which always pass the restricted verification
  for (int x : doubly_irreducibles(l)) {
    corner_result c = find_corner(l, x);
    if (!c.found) continue;

    auto del = delete_elements(l, {x});
    std::vector<int> idx(l.size(), -1);
    for (size_t k = 0; k < del.kept.size(); ++k) {
      idx[del.kept[k]] = static_cast<int>(k);
    }
    std::vector<cover_pair> compact;
    compact.reserve(del.covers.size());
    for (const auto& [a, b] : del.covers) compact.push_back({idx[a], idx[b]});
    lattice sub =
        lattice::from_covers(static_cast<int>(del.kept.size()), compact);
    edge_labeling g = remap(build_labeling(sub), del.kept);

    std::vector<rational> values;
    values.reserve(g.size());
    for (const auto& [cv, lab] : g) values.push_back(lab);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<rational> grid;
    grid.push_back(values.front() - rational(1));
    for (size_t i = 0; i < values.size(); ++i) {
      grid.push_back(values[i]);
      if (i + 1 < values.size()) {
        grid.push_back(rational::mid(values[i], values[i + 1]));
      }
    }
    grid.push_back(values.back() + rational(1));

    rational seed_down = g.at({c.z, c.w});
    rational seed_up = g.at({c.w, c.y});
    std::vector<std::pair<rational, rational>> candidates;
    candidates.reserve(grid.size() * grid.size());
    for (const rational& alpha : grid) {
      for (const rational& beta : grid) candidates.push_back({alpha, beta});
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](const auto& p, const auto& q) {
                return std::tuple(distance(p.first, seed_down) +
                                      distance(p.second, seed_up),
                                  p.first, p.second) <
                       std::tuple(distance(q.first, seed_down) +
                                      distance(q.second, seed_up),
                                  q.first, q.second);
              });

    for (const auto& [alpha, beta] : candidates) {
      f = g;
      f[{c.z, c.x}] = alpha;
      f[{c.x, c.y}] = beta;
      if (intervals_around_pass(l, f, x)) return f;
    }
    throw extension_exhausted_error(x);
  }
  throw precondition_error("no doubly irreducible element with a corner");
}

}  // namespace

edge_labeling construct_el(const lattice& l) {
  if (!is_rank_connected(l).ok) {
    throw precondition_error("lattice is not rank-connected");
  }
  if (!dismantling_sequence(l).ok) {
    throw precondition_error("lattice is not dismantlable");
  }
  return build_labeling(l);
}

std::optional<edge_labeling> search_el(const lattice& l, int max_labels) {
  const auto& cs = l.covers();
  int m = static_cast<int>(cs.size());
  if (m > 12) throw size_limit_error("search_el", 12, m);
  rank_result rk = rank_function(l);
  if (!rk.ok()) throw precondition_error("lattice is not ranked");
  if (m == 0) return edge_labeling{};
  if (max_labels <= 0) max_labels = m;
  const std::vector<int>& r = *rk.ranks;

  std::vector<cover_pair> order(cs);
  std::sort(order.begin(), order.end(), [&](const cover_pair& a,
                                            const cover_pair& b) {
    return std::tuple(r[a.first], a.first, a.second) <
           std::tuple(r[b.first], b.first, b.second);
  });

  // every rank-gap >= 2 interval, with a countdown of unlabeled covers so
  // each interval is checked the moment its last cover gets a label
  struct pending_interval {
    int x, y;
    int remaining = 0;
  };
  std::vector<pending_interval> intervals;
  std::vector<std::vector<int>> cover_intervals(m);
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (x == y || !l.leq(x, y) || r[y] - r[x] < 2) continue;
      elem_set members = l.interval_members(x, y);
      pending_interval iv{x, y, 0};
      int id = static_cast<int>(intervals.size());
      for (int k = 0; k < m; ++k) {
        if (members.test(order[k].first) && members.test(order[k].second)) {
          ++iv.remaining;
          cover_intervals[k].push_back(id);
        }
      }
      intervals.push_back(iv);
    }
  }

  edge_labeling f;
  std::vector<std::pair<rational, int>> used;  // sorted values with use counts

  auto dfs = [&](auto&& self, int k) -> bool {
    if (k == m) return verify_el(l, f).ok;

    // candidate labels in ascending order: existing values keep the
    // distinct count, gaps and the two outer sentinels extend it
    std::vector<rational> opts;
    if (used.empty()) {
      opts.push_back(rational(1));
    } else {
      bool can_extend = static_cast<int>(used.size()) < max_labels;
      if (can_extend) opts.push_back(used.front().first - rational(1));
      for (size_t i = 0; i < used.size(); ++i) {
        opts.push_back(used[i].first);
        if (can_extend && i + 1 < used.size()) {
          opts.push_back(rational::mid(used[i].first, used[i + 1].first));
        }
      }
      if (can_extend) opts.push_back(used.back().first + rational(1));
    }

    for (const rational& val : opts) {
      f[order[k]] = val;
      auto pos = std::lower_bound(
          used.begin(), used.end(), val,
          [](const auto& p, const rational& v) { return p.first < v; });
      if (pos != used.end() && pos->first == val) {
        ++pos->second;
      } else {
        used.insert(pos, {val, 1});
      }

      bool viable = true;
      for (int j : cover_intervals[k]) {
        if (--intervals[j].remaining == 0 && viable) {
          viable = check_one_interval(l, f, intervals[j].x, intervals[j].y)
                       .defect == el_defect::none;
        }
      }
      if (viable && self(self, k + 1)) return true;

      for (int j : cover_intervals[k]) ++intervals[j].remaining;
      auto back = std::lower_bound(
          used.begin(), used.end(), val,
          [](const auto& p, const rational& v) { return p.first < v; });
      if (--back->second == 0) used.erase(back);
      f.erase(order[k]);
    }
    return false;
  };

  if (dfs(dfs, 0)) return f;
  return std::nullopt;
}

}  // namespace hasse
