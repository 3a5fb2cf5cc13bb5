#include "hasse/admissibility.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hasse/errors.hpp"
#include "hasse/lattice.hpp"
#include "hasse/shelling.hpp"
#include "helpers.hpp"

using hasse::lattice;
using hasse::natural_labeling;
using hasse::rational;
using testutil::covers_t;

namespace {

lattice build(const covers_t& cs) { return lattice::from_covers(cs); }

std::vector<natural_labeling> collect(const lattice& l) {
  std::vector<natural_labeling> out;
  hasse::enumerate_natural_labelings(l, [&](const natural_labeling& omega) {
    out.push_back(omega);
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE("admissibility") {

TEST_CASE("join irreducibles") {
  CHECK(hasse::join_irreducibles(build(testutil::f1b_covers())) ==
        std::vector<int>{1, 2, 3, 4, 6, 7});
  CHECK(hasse::join_irreducibles(build(testutil::chain_covers(5))) ==
        std::vector<int>{1, 2, 3, 4});
  CHECK(hasse::join_irreducibles(build(testutil::b3_covers())) ==
        std::vector<int>{1, 2, 4});
  CHECK(hasse::join_irreducibles(build(testutil::f1d_covers())) ==
        std::vector<int>{1, 2, 3, 4, 5, 7});

  // one lower cover, straight off the cover lists
  for (auto& cs : {testutil::f1a_covers(), testutil::f1c_covers()}) {
    lattice l = build(cs);
    std::vector<int> down(l.size(), 0), expect;
    for (auto& [a, b] : cs) ++down[b];
    for (int v = 0; v < l.size(); ++v) {
      if (down[v] == 1) expect.push_back(v);
    }
    CHECK(hasse::join_irreducibles(l) == expect);
  }
}

TEST_CASE("natural labeling enumeration") {
  SUBCASE("antichain of two is unconstrained") {
    auto maps = collect(build(testutil::diamond_covers()));
    CHECK(maps == std::vector<natural_labeling>{{{1, 1}, {2, 1}},
                                                {{1, 1}, {2, 2}},
                                                {{1, 2}, {2, 1}},
                                                {{1, 2}, {2, 2}}});
  }

  SUBCASE("two-chain drops the decreasing map") {
    auto maps = collect(build(testutil::chain_covers(3)));
    CHECK(maps == std::vector<natural_labeling>{
                      {{1, 1}, {2, 1}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 2}}});
  }

  SUBCASE("planar counterexample fixture count") {
    long long count = hasse::enumerate_natural_labelings(
        build(testutil::f1b_covers()), [](const natural_labeling&) {
          return true;
        });
    CHECK(count == 8281);
  }

  SUBCASE("all visited labelings are valid") {
    lattice l = build(testutil::f1d_covers());
    auto ji = hasse::join_irreducibles(l);
    int k = static_cast<int>(ji.size());
    long long count =
        hasse::enumerate_natural_labelings(l, [&](const natural_labeling& w) {
          REQUIRE(static_cast<int>(w.size()) == k);
          for (auto& [z, v] : w) {
            CHECK(v >= 1);
            CHECK(v <= k);
          }
          for (int z : ji) {
            for (int u : ji) {
              if (z != u && l.leq(z, u)) CHECK(w.at(z) <= w.at(u));
            }
          }
          return true;
        });
    CHECK(count > 0);
  }

  SUBCASE("early stop returns the running count") {
    long long count = hasse::enumerate_natural_labelings(
        build(testutil::f1b_covers()), [n = 0](const natural_labeling&) mutable {
          return ++n < 5;
        });
    CHECK(count == 5);
  }

  CHECK_THROWS_AS(collect(build(testutil::mk_covers(9))),
                  hasse::size_limit_error);
}

TEST_CASE("gamma labeling") {
  SUBCASE("chain gamma names the upper endpoint") {
    lattice l = build(testutil::chain_covers(5));
    natural_labeling omega{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    auto gamma = hasse::gamma_labeling(l, omega);
    for (auto& [c, lab] : gamma) CHECK(lab == rational(omega.at(c.second)));
  }

  SUBCASE("cube gamma recovers the inserted atom's value") {
    lattice l = build(testutil::b3_covers());
    natural_labeling omega{{1, 1}, {2, 2}, {4, 3}};
    auto gamma = hasse::gamma_labeling(l, omega);
    for (auto& [a, b] : l.covers()) {
      CHECK(gamma.at({a, b}) == rational(omega.at(a ^ b)));
    }
  }

  SUBCASE("fixture anchor covers under every natural labeling") {
    // the join-irreducibles missing below 10 are {1, 3, 4}, whose smallest
    // omega is always omega(1); only 6 joins 7 up to exactly 10
    lattice l = build(testutil::f1b_covers());
    long long count =
        hasse::enumerate_natural_labelings(l, [&](const natural_labeling& w) {
          auto gamma = hasse::gamma_labeling(l, w);
          CHECK(gamma.at({10, 11}) == rational(w.at(1)));
          CHECK(gamma.at({7, 10}) == rational(w.at(6)));
          return true;
        });
    CHECK(count == 8281);
  }

  SUBCASE("invalid labelings are rejected") {
    lattice chain = build(testutil::chain_covers(3));
    CHECK_THROWS_AS(hasse::gamma_labeling(chain, {{1, 1}}),
                    hasse::precondition_error);
    CHECK_THROWS_AS(hasse::gamma_labeling(chain, {{1, 2}, {2, 1}}),
                    hasse::precondition_error);
    CHECK_THROWS_AS(hasse::gamma_labeling(chain, {{1, 0}, {2, 1}}),
                    hasse::precondition_error);
  }
}

TEST_CASE("single labeling check") {
  SUBCASE("chains accept every natural labeling") {
    lattice l = build(testutil::chain_covers(6));
    long long count =
        hasse::enumerate_natural_labelings(l, [&](const natural_labeling& w) {
          CHECK(hasse::check_admissible_with(l, w).ok);
          return true;
        });
    CHECK(count > 0);
  }

  SUBCASE("pentagon witnesses both failure shapes") {
    lattice l = build(testutil::pentagon_covers());

    auto bad = hasse::check_admissible_with(l, {{1, 1}, {2, 2}, {3, 1}});
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.x == 1);
    CHECK(bad.y == 4);
    CHECK(bad.chains.empty());

    auto good = hasse::check_admissible_with(l, {{1, 1}, {2, 1}, {3, 2}});
    CHECK(good.ok);
  }

  SUBCASE("tied bottom labels split the five-element interval") {
    lattice l = build(testutil::f1b_covers());
    int tied = 0;
    hasse::enumerate_natural_labelings(l, [&](const natural_labeling& w) {
      if (w.at(1) != w.at(2)) return true;
      ++tied;
      auto res = hasse::check_admissible_with(l, w);
      REQUIRE_FALSE(res.ok);
      CHECK(res.x == 0);
      CHECK(res.y == 5);
      REQUIRE(res.chains.size() == 2);
      CHECK(res.chains[0] == std::vector<int>{0, 1, 5});
      CHECK(res.chains[1] == std::vector<int>{0, 2, 5});
      return true;
    });
    CHECK(tied > 0);
  }

  SUBCASE("witnesses replay through rising chains") {
    lattice l = build(testutil::pentagon_covers());
    natural_labeling omega{{1, 1}, {2, 2}, {3, 1}};
    auto res = hasse::check_admissible_with(l, omega);
    REQUIRE_FALSE(res.ok);
    auto gamma = hasse::gamma_labeling(l, omega);
    CHECK(hasse::rising_chains(l, gamma, res.x, res.y).empty());

    lattice f1b = build(testutil::f1b_covers());
    natural_labeling tied{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {7, 1}};
    auto split = hasse::check_admissible_with(f1b, tied);
    REQUIRE_FALSE(split.ok);
    auto replay = hasse::rising_chains(f1b, hasse::gamma_labeling(f1b, tied),
                                       split.x, split.y);
    for (auto& chain : split.chains) {
      CHECK(std::count(replay.begin(), replay.end(), chain) == 1);
    }
  }

  SUBCASE("verdicts depend only on the label order pattern") {
    lattice l = build(testutil::b3_covers());
    natural_labeling base{{1, 1}, {2, 2}, {4, 3}};
    natural_labeling stretched{{1, 2}, {2, 5}, {4, 9}};
    auto a = hasse::check_admissible_with(l, base);
    auto b = hasse::check_admissible_with(l, stretched);
    CHECK(a.ok == b.ok);

    natural_labeling tied{{1, 1}, {2, 1}, {4, 2}};
    natural_labeling tied_stretched{{1, 3}, {2, 3}, {4, 8}};
    auto c = hasse::check_admissible_with(l, tied);
    auto d = hasse::check_admissible_with(l, tied_stretched);
    CHECK(c.ok == d.ok);
    CHECK(c.x == d.x);
    CHECK(c.y == d.y);
    CHECK(c.chains == d.chains);
  }
}

TEST_CASE("admissibility decision") {
  SUBCASE("planar counterexample fixture exhausts every labeling") {
    auto res = hasse::is_admissible(build(testutil::f1b_covers()));
    CHECK_FALSE(res.ok);
    CHECK(res.omega.empty());
    CHECK(res.examined == 8281);
  }

  SUBCASE("cube passes on the sixth labeling") {
    auto res = hasse::is_admissible(build(testutil::b3_covers()));
    REQUIRE(res.ok);
    CHECK(res.omega == natural_labeling{{1, 1}, {2, 2}, {4, 3}});
    CHECK(res.examined == 6);
  }

  SUBCASE("chain passes immediately with all-equal labels") {
    auto res = hasse::is_admissible(build(testutil::chain_covers(5)));
    REQUIRE(res.ok);
    CHECK(res.omega == natural_labeling{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(res.examined == 1);
  }

  SUBCASE("small shapes") {
    auto pent = hasse::is_admissible(build(testutil::pentagon_covers()));
    REQUIRE(pent.ok);
    CHECK(pent.omega == natural_labeling{{1, 1}, {2, 1}, {3, 2}});

    auto m3 = hasse::is_admissible(build(testutil::mk_covers(3)));
    REQUIRE(m3.ok);
    CHECK(m3.omega == natural_labeling{{1, 1}, {2, 2}, {3, 2}});
    CHECK(m3.examined == 5);

    auto trivial = hasse::is_admissible(lattice::from_covers(1, {}));
    REQUIRE(trivial.ok);
    CHECK(trivial.omega.empty());
  }

  SUBCASE("found labelings replay as unique rising chains everywhere") {
    for (auto& cs : {testutil::b3_covers(), testutil::pentagon_covers(),
                     testutil::f1c_covers()}) {
      lattice l = build(cs);
      auto res = hasse::is_admissible(l);
      if (!res.ok) continue;
      auto gamma = hasse::gamma_labeling(l, res.omega);
      for (int x = 0; x < l.size(); ++x) {
        for (int y = 0; y < l.size(); ++y) {
          if (x == y || !l.leq(x, y)) continue;
          CHECK(hasse::rising_chains(l, gamma, x, y).size() == 1);
        }
      }
    }
  }

  CHECK_THROWS_AS(hasse::is_admissible(build(testutil::mk_covers(9))),
                  hasse::size_limit_error);
}

}  // TEST_SUITE
