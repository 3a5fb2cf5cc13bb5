#include "hasse/admissibility.hpp"

#include <algorithm>

#include "hasse/errors.hpp"

namespace hasse {

std::vector<int> join_irreducibles(const lattice& l) {
  std::vector<int> out;
  for (int v = 0; v < l.size(); ++v) {
    if (l.lower_covers(v).size() == 1) out.push_back(v);
  }
  return out;
}

namespace {

// omega must cover exactly the join-irreducibles, with positive values that
// never decrease upward.  The {1..|J|} codomain cap is left to the
// enumerator: checks accept any order-pattern-equivalent labeling.
void validate_omega(const lattice& l, const natural_labeling& omega) {
  std::vector<int> ji = join_irreducibles(l);
  if (omega.size() != ji.size()) {
    throw precondition_error("omega does not label the join-irreducibles");
  }
  for (int z : ji) {
    auto it = omega.find(z);
    if (it == omega.end()) {
      throw precondition_error("omega does not label the join-irreducibles");
    }
    if (it->second < 1) throw precondition_error("omega value below 1");
  }
  for (int z : ji) {
    for (int w : ji) {
      if (z != w && l.leq(z, w) && omega.at(z) > omega.at(w)) {
        throw precondition_error("omega is not order-preserving");
      }
    }
  }
}

}  // namespace

long long enumerate_natural_labelings(
    const lattice& l, const std::function<bool(const natural_labeling&)>& visit,
    int max_j) {
  std::vector<int> ji = join_irreducibles(l);
  int k = static_cast<int>(ji.size());
  if (k > max_j) {
    throw size_limit_error("enumerate_natural_labelings", max_j, k);
  }

  natural_labeling omega;
  long long visited = 0;
  bool stopped = false;
  auto assign = [&](auto&& self, int i) -> void {
    if (stopped) return;
    if (i == k) {
      ++visited;
      if (!visit(omega)) stopped = true;
      return;
    }
    for (int v = 1; v <= k && !stopped; ++v) {
      bool fits = true;
      for (int j = 0; j < i && fits; ++j) {
        if (l.leq(ji[j], ji[i]) && omega[ji[j]] > v) fits = false;
        if (l.leq(ji[i], ji[j]) && v > omega[ji[j]]) fits = false;
      }
      if (!fits) continue;
      omega[ji[i]] = v;
      self(self, i + 1);
      omega.erase(ji[i]);
    }
  };
  if (k == 0) {
    ++visited;
    visit(omega);
    return visited;
  }
  assign(assign, 0);
  return visited;
}

edge_labeling gamma_labeling(const lattice& l, const natural_labeling& omega) {
  validate_omega(l, omega);
  edge_labeling gamma;
  for (const auto& [a, b] : l.covers()) {
    int best = 0;
    for (const auto& [z, w] : omega) {
      if (l.leq(z, b) && !l.leq(z, a) && (best == 0 || w < best)) best = w;
    }
    if (best == 0) throw precondition_error("gamma undefined on a cover");
    gamma[{a, b}] = rational(best);
  }
  return gamma;
}

admissible_check check_admissible_with(const lattice& l,
                                       const natural_labeling& omega) {
  edge_labeling gamma = gamma_labeling(l, omega);
  admissible_check res;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (x == y || !l.leq(x, y)) continue;
      const auto& ups = l.upper_covers(x);
      if (std::binary_search(ups.begin(), ups.end(), y)) continue;
      auto chains = rising_chains(l, gamma, x, y);
      if (chains.size() == 1) continue;
      res.x = x;
      res.y = y;
      if (chains.size() > 1) {
        res.chains = {chains[0], chains[1]};
      }
      return res;
    }
  }
  res.ok = true;
  return res;
}

admissibility_result is_admissible(const lattice& l, int max_j) {
  admissibility_result res;
  res.examined = enumerate_natural_labelings(
      l,
      [&](const natural_labeling& omega) {
        if (check_admissible_with(l, omega).ok) {
          res.ok = true;
          res.omega = omega;
          return false;
        }
        return true;
      },
      max_j);
  return res;
}

}  // namespace hasse
