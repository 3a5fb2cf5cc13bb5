#include <string>
#include <vector>

#include "doctest.h"
#include "hasse/io.hpp"
#include "helpers.hpp"

using hasse::edge_labeling;
using hasse::lattice;
using hasse::lattice_file;
using hasse::natural_labeling;
using hasse::rational;

namespace {

lattice mk(const testutil::covers_t& cs) {
  std::vector<hasse::cover_pair> covers(cs.begin(), cs.end());
  return lattice::from_covers(covers);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("lattice files round-trip through serialize and parse") {
  lattice_file file;
  file.lat = mk(testutil::f1b_covers());
  for (int v = 0; v < 12; ++v) file.names.push_back("p" + std::to_string(v));
  file.has_labels = true;
  file.labels[{0, 1}] = rational(1);
  file.labels[{0, 2}] = rational(3, 2);
  file.has_omega = true;
  file.omega = {{1, 1}, {2, 2}};

  lattice_file back = hasse::parse_lattice_file(hasse::serialize_lattice_file(file));
  CHECK(back.lat.size() == 12);
  CHECK(back.lat.covers() == file.lat.covers());
  CHECK(back.names == file.names);
  CHECK(back.has_labels);
  CHECK(back.labels == file.labels);
  CHECK(back.has_omega);
  CHECK(back.omega == file.omega);

  SUBCASE("minimal document") {
    lattice_file tiny = hasse::parse_lattice_file("{\"n\":1,\"covers\":[]}");
    CHECK(tiny.lat.size() == 1);
    CHECK_FALSE(tiny.has_labels);
    CHECK_FALSE(tiny.has_omega);
    CHECK(hasse::serialize_lattice_file(tiny) ==
          "{\n  \"n\": 1,\n  \"covers\": []\n}\n");
  }

  SUBCASE("label strings accept integers and fractions") {
    lattice_file f = hasse::parse_lattice_file(
        R"({"n":2,"covers":[[0,1]],"labels":[[0,1,"5/3"]]})");
    CHECK(f.labels.at({0, 1}) == rational(5, 3));
    f = hasse::parse_lattice_file(
        R"({"n":2,"covers":[[0,1]],"labels":[[0,1,"2"]]})");
    CHECK(f.labels.at({0, 1}) == rational(2));
  }
}

TEST_CASE("malformed documents are rejected with diagnostics") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(hasse::parse_lattice_file(text), std::invalid_argument);
  };
  bad("[1,2");                                       // truncated json
  bad("[]");                                         // not an object
  bad(R"({"n":2})");                                 // covers missing
  bad(R"({"covers":[[0,1]]})");                      // n missing
  bad(R"({"n":"two","covers":[[0,1]]})");            // n not integer
  bad(R"({"n":0,"covers":[]})");                     // n out of range
  bad(R"({"n":2,"covers":[[0]]})");                  // pair arity
  bad(R"({"n":2,"covers":[[0,"x"]]})");              // pair entry type
  bad(R"({"n":2,"covers":[[0,1]],"names":["a"]})");  // names arity
  bad(R"({"n":2,"covers":[[0,1]],"names":[1,2]})");  // names type
  bad(R"({"n":2,"covers":[[0,1]],"labels":[[0,1]]})");      // label arity
  bad(R"({"n":2,"covers":[[0,1]],"labels":[[0,1,"a/b"]]})");  // label literal
  bad(R"({"n":2,"covers":[[0,1]],"omega":[[1]]})");  // omega arity

  // Structurally broken cover relations surface as build errors instead.
  CHECK_THROWS_AS(hasse::parse_lattice_file(R"({"n":3,"covers":[[0,1],[0,2]]})"),
                  hasse::build_error);
}

TEST_CASE("json encoders are byte-stable") {
  CHECK(hasse::lattice_to_json(mk(testutil::diamond_covers())).dump() ==
        R"({"n":4,"covers":[[0,1],[0,2],[1,3],[2,3]]})");

  edge_labeling f;
  f[{0, 2}] = rational(3, 2);
  f[{0, 1}] = rational(1);
  CHECK(hasse::labels_to_json(f).dump() == R"([[0,1,"1"],[0,2,"3/2"]])");

  natural_labeling omega = {{2, 5}, {1, 1}};
  CHECK(hasse::omega_to_json(omega).dump() == "[[1,1],[2,5]]");

  SUBCASE("omega flag specs") {
    CHECK(hasse::parse_omega_spec("1=1,2=3") == natural_labeling{{1, 1}, {2, 3}});
    CHECK(hasse::parse_omega_spec("").empty());
    CHECK_THROWS_AS(hasse::parse_omega_spec("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(hasse::parse_omega_spec("x=1"), std::invalid_argument);
    CHECK_THROWS_AS(hasse::parse_omega_spec("1="), std::invalid_argument);
  }
}

TEST_CASE("dot rendering is deterministic with ranks, names and labels") {
  lattice_file diamond;
  diamond.lat = mk(testutil::diamond_covers());
  CHECK(hasse::render_dot(diamond) ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  node [shape=box, style=rounded];\n"
        "  0 [label=\"0\"];\n"
        "  1 [label=\"1\"];\n"
        "  2 [label=\"2\"];\n"
        "  3 [label=\"3\"];\n"
        "  { rank=same; 0; }\n"
        "  { rank=same; 1; 2; }\n"
        "  { rank=same; 3; }\n"
        "  0 -> 1;\n"
        "  0 -> 2;\n"
        "  1 -> 3;\n"
        "  2 -> 3;\n"
        "}\n");
  CHECK(hasse::render_dot(diamond) == hasse::render_dot(diamond));

  SUBCASE("unranked lattices render without rank groups") {
    lattice_file pent;
    pent.lat = mk(testutil::pentagon_covers());
    CHECK(hasse::render_dot(pent).find("rank=same") == std::string::npos);
  }

  SUBCASE("node and edge counts follow the lattice") {
    lattice_file f;
    f.lat = mk(testutil::f1d_covers());
    std::string dot = hasse::render_dot(f);
    int nodes = 0, edges = 0;
    for (size_t at = dot.find("[label="); at != std::string::npos;
         at = dot.find("[label=", at + 1))
      ++nodes;
    for (size_t at = dot.find(" -> "); at != std::string::npos;
         at = dot.find(" -> ", at + 1))
      ++edges;
    CHECK(nodes == 9);
    CHECK(edges == 13);
  }

  SUBCASE("names are quoted and escaped") {
    lattice_file f;
    f.lat = mk(testutil::chain_covers(2));
    f.names = {"bot", "a\"b\\c"};
    std::string dot = hasse::render_dot(f);
    CHECK(dot.find("  0 [label=\"bot\"];\n") != std::string::npos);
    CHECK(dot.find("  1 [label=\"a\\\"b\\\\c\"];\n") != std::string::npos);
  }

  SUBCASE("labels annotate exactly the covers that carry them") {
    lattice_file f;
    f.lat = mk(testutil::diamond_covers());
    f.has_labels = true;
    f.labels[{0, 1}] = rational(1, 2);
    std::string dot = hasse::render_dot(f);
    CHECK(dot.find("  0 -> 1 [label=\"1/2\"];\n") != std::string::npos);
    CHECK(dot.find("  0 -> 2;\n") != std::string::npos);
  }
}

}  // TEST_SUITE
