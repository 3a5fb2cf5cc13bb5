#include "hasse/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <set>

#include "hasse/admissibility.hpp"
#include "hasse/io.hpp"
#include "hasse/predicates.hpp"
#include "hasse/shelling.hpp"

namespace hasse {

namespace {

// Ids bottom-up, left-to-right: 0; atoms 1..5; middles 6..10; coatoms
// 11..14; top 15.  Each atom 1+i sits under middle 6+i, with the extra
// diagonal covers wrapping atom 5 back under middle 6.
std::vector<cover_pair> f1a_covers() {
  std::vector<cover_pair> cs;
  for (int i = 0; i < 5; ++i) cs.push_back({0, 1 + i});
  for (int i = 0; i < 5; ++i) cs.push_back({1 + i, 6 + i});
  cs.insert(cs.end(), {{2, 8}, {3, 9}, {4, 10}, {5, 6}});
  for (int i = 0; i < 4; ++i) {
    cs.push_back({6 + i, 11 + i});
    cs.push_back({7 + i, 11 + i});
  }
  for (int i = 0; i < 4; ++i) cs.push_back({11 + i, 15});
  return cs;
}

std::vector<cover_pair> f1b_covers() {
  return {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5},
          {2, 6}, {2, 7}, {3, 8}, {4, 8}, {4, 9}, {5, 9},
          {6, 9}, {6, 10}, {7, 10}, {8, 11}, {9, 11}, {10, 11}};
}

std::vector<cover_pair> f1c_covers() {
  return {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5},
          {3, 6}, {4, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 9},
          {7, 9}, {7, 10}, {8, 10}, {9, 11}, {10, 11}};
}

// 9 elements: 0; atoms 1,2,3; coatoms 4..7; top 8.
std::vector<cover_pair> f1d_covers() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 6}, {2, 5},
          {2, 6}, {3, 6}, {3, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"f1a", "f1b", "f1c", "f1d"};
  return names;
}

fixture get_fixture(const std::string& name) {
  fixture f;
  f.name = name;
  if (name == "f1a") {
    f.lat = lattice::from_covers(16, f1a_covers());
    f.claims = {{"rank_connected", true},
                {"interval_connected", false},
                {"planar", false}};
  } else if (name == "f1b") {
    f.lat = lattice::from_covers(12, f1b_covers());
    f.claims = {{"planar", true},
                {"rank_connected", true},
                {"el_shellable", true},
                {"admissible", false}};
  } else if (name == "f1c") {
    f.lat = lattice::from_covers(12, f1c_covers());
    f.claims = {{"planar", true},
                {"rank_connected", true},
                {"upper_semimodular", false},
                {"lower_semimodular", false}};
  } else if (name == "f1d") {
    f.lat = lattice::from_covers(9, f1d_covers());
    f.claims = {{"dismantlable", true}, {"planar", false}};
  } else {
    throw precondition_error("unknown fixture: " + name);
  }
  return f;
}

bool evaluate_claim(const lattice& l, const std::string& predicate) {
  if (predicate == "ranked") return rank_function(l).ok();
  if (predicate == "rank_connected") return is_rank_connected(l).ok;
  if (predicate == "interval_connected") return is_interval_connected(l).ok;
  if (predicate == "dismantlable") return dismantling_sequence(l).ok;
  if (predicate == "planar") return is_planar(l).ok;
  if (predicate == "upper_semimodular") return is_upper_semimodular(l).ok;
  if (predicate == "lower_semimodular") return is_lower_semimodular(l).ok;
  if (predicate == "admissible") return is_admissible(l).ok;
  if (predicate == "el_shellable") {
    if (is_rank_connected(l).ok && dismantling_sequence(l).ok)
      return verify_el(l, construct_el(l)).ok;
    return search_el(l).has_value();
  }
  throw precondition_error("unknown predicate: " + predicate);
}

std::string shape_name(const lattice& l) {
  size_t covers = l.covers().size();
  if (covers == static_cast<size_t>(l.size()) - 1) return "chain";
  if (l.size() == 4 && covers == 4) return "diamond";
  return "c" + std::to_string(covers) + "h" +
         std::to_string(l.height(l.top()));
}

namespace {

// Growth state for the enumerator.  Element k's strict down-set is frozen
// when k is inserted, so down-set masks and the meet table extend one row
// per step and stay valid for every later prefix.
struct growth {
  int n;
  std::vector<uint32_t> down;       // down[i] includes bit i
  std::vector<int> meet;            // n*n, filled for inserted pairs
  std::vector<uint32_t> lower;      // chosen lower-cover antichain per element

  explicit growth(int n_) : n(n_), down(n_), meet(n_ * n_, -1), lower(n_) {
    down[0] = 1;
    meet[0] = 0;
  }

  int& meet_at(int i, int j) { return meet[i * n + j]; }

  // Tries to insert element k with lower-cover antichain `mask`.  Fails when
  // some earlier element i would lose a unique meet with k: the common lower
  // bounds of i and k are the union of down[meet(a,i)] over a in mask, so
  // they have a maximum iff one of those meets dominates the others.
  bool insert(int k, uint32_t mask) {
    uint32_t dk = 1u << k;
    for (uint32_t rest = mask; rest; rest &= rest - 1) {
      int a = std::countr_zero(rest);
      dk |= down[a];
    }
    for (int i = 0; i < k; ++i) {
      uint32_t meets = 0;
      for (uint32_t rest = mask; rest; rest &= rest - 1) {
        int a = std::countr_zero(rest);
        meets |= 1u << meet_at(a, i);
      }
      int best = -1;
      for (uint32_t rest = meets; rest; rest &= rest - 1) {
        int m = std::countr_zero(rest);
        if ((meets & ~down[m]) == 0) {
          best = m;
          break;
        }
      }
      if (best < 0) return false;
      meet_at(i, k) = meet_at(k, i) = best;
    }
    down[k] = dk;
    meet_at(k, k) = k;
    lower[k] = mask;
    return true;
  }
};

}  // namespace

long long enumerate_lattices(
    int n, const std::function<bool(const lattice&)>& visit) {
  if (n < 1) throw precondition_error("enumerate_lattices needs n >= 1");
  if (n > 10) throw size_limit_error("enumerate_lattices", 10, n);

  long long count = 0;
  if (n == 1) {
    ++count;
    visit(lattice::from_covers(1, {}));
    return count;
  }

  growth g(n);
  std::set<std::string> seen;
  bool stopped = false;

  auto emit = [&]() {
    std::vector<cover_pair> covers;
    for (int k = 1; k < n; ++k) {
      for (uint32_t rest = g.lower[k]; rest; rest &= rest - 1)
        covers.push_back({std::countr_zero(rest), k});
    }
    lattice l = lattice::from_covers(n, covers);
    if (!seen.insert(canonical_form(l)).second) return;
    ++count;
    if (!visit(l)) stopped = true;
  };

  auto grow = [&](auto&& self, int k) -> void {
    if (stopped) return;
    if (k == n) {
      // The top must close the order: the last down-set covers everything.
      if (g.down[n - 1] == (1u << n) - 1) emit();
      return;
    }
    for (uint32_t mask = 1; mask < (1u << k) && !stopped; ++mask) {
      // Antichain test: each chosen element meets the mask only in itself.
      bool antichain = true;
      for (uint32_t rest = mask; rest && antichain; rest &= rest - 1) {
        int b = std::countr_zero(rest);
        if ((g.down[b] & mask) != (1u << b)) antichain = false;
      }
      if (!antichain) continue;
      if (g.insert(k, mask)) self(self, k + 1);
    }
  };
  grow(grow, 1);
  return count;
}

random_lattice random_dismantlable(int n, unsigned long long seed) {
  if (n < 2) throw precondition_error("random_dismantlable needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<cover_pair> covers = {{0, 1}};
  for (int x = 2; x < n; ++x) {
    std::sort(covers.begin(), covers.end());
    std::set<cover_pair> paths;
    for (const auto& [z, w] : covers) {
      for (const auto& [w2, y] : covers) {
        if (w2 == w) paths.insert({z, y});
      }
    }
    size_t pick = rng() % (covers.size() + paths.size());
    if (pick < covers.size()) {
      // Subdivide: u < x < v replaces the cover (u,v).
      auto [u, v] = covers[pick];
      covers.erase(covers.begin() + pick);
      covers.push_back({u, x});
      covers.push_back({x, v});
    } else {
      // Double: x joins some w as a second middle of the path z < w < y.
      auto it = paths.begin();
      std::advance(it, pick - covers.size());
      covers.push_back({it->first, x});
      covers.push_back({x, it->second});
    }
  }
  random_lattice out;
  out.lat = lattice::from_covers(n, covers);
  for (int x = n - 1; x >= 2; --x) out.certificate.push_back(x);
  return out;
}

void cross_checker::feed(const lattice& l) {
  int index = static_cast<int>(report_.lattices++);
  bool ranked = rank_function(l).ok();
  bool rank_conn = is_rank_connected(l).ok;
  std::optional<bool> interval_conn;
  if (ranked) interval_conn = is_interval_connected(l).ok;
  bool dismantlable = dismantling_sequence(l).ok;
  bool planar = is_planar(l).ok;

  // Edge-labeling status: "constructed" via the constructive route,
  // "found"/"none" via exhaustive search, "unchecked" when out of reach.
  std::string el = "unchecked";
  if (rank_conn && dismantlable) {
    el = verify_el(l, construct_el(l)).ok ? "constructed" : "failed";
  } else if (ranked && l.covers().size() <= 12) {
    el = search_el(l) ? "found" : "none";
  }

  std::optional<bool> admissible;
  try {
    admissible = is_admissible(l).ok;
  } catch (const size_limit_error&) {
    ++report_.admissibility_skipped;
  }

  if (records_) {
    ordered_json rec = {{"record", "lattice"},
                        {"index", index},
                        {"name", shape_name(l)},
                        {"n", l.size()},
                        {"covers", lattice_to_json(l)["covers"]},
                        {"ranked", ranked},
                        {"rank_connected", rank_conn},
                        {"interval_connected",
                         interval_conn ? ordered_json(*interval_conn)
                                       : ordered_json(nullptr)},
                        {"dismantlable", dismantlable},
                        {"planar", planar},
                        {"el", el},
                        {"admissible", admissible ? ordered_json(*admissible)
                                                  : ordered_json(nullptr)}};
    *records_ << rec.dump() << "\n";
  }

  auto violated = [&](const char* implication, const char* what) {
    throw implication_violated_error(implication, lattice_to_json(l).dump(),
                                     what);
  };

  if (ranked && interval_conn.value()) {
    ++report_.interval_connected_checked;
    if (!rank_conn)
      violated("interval_connected_implies_rank_connected",
               "interval-connected lattice with a disconnected rank level");
  }
  if (rank_conn && ranked && !interval_conn.value())
    ++report_.rank_not_interval;
  if (rank_conn && dismantlable) {
    if (el != "constructed")
      violated("rank_connected_dismantlable_implies_shellable",
               "constructed labeling rejected by the verifier");
    ++report_.labelings_constructed;
  }
  if (planar && !dismantlable)
    violated("planar_implies_dismantlable",
             "planar lattice with no dismantling sequence");
  if (admissible && *admissible) {
    if (el == "constructed" || el == "found") {
      ++report_.admissible_confirmed;
    } else if (el == "none") {
      violated("admissible_implies_shellable",
               "admissible lattice where the labeling search exhausted");
    } else {
      ++report_.admissible_unchecked;
    }
  }
}

cross_check_report cross_check(const std::vector<lattice>& batch,
                               std::ostream* records) {
  cross_checker checker(records);
  for (const lattice& l : batch) checker.feed(l);
  return checker.report();
}

}  // namespace hasse
