#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hasse/admissibility.hpp"
#include "hasse/lattice.hpp"
#include "hasse/shelling.hpp"

namespace hasse {

using ordered_json = nlohmann::ordered_json;

// On-disk description of a lattice plus optional companions: display names,
// a proposed edge labeling, and a proposed natural labeling of the
// join-irreducibles.  Absent companions leave the flags false.
struct lattice_file {
  lattice lat;
  std::vector<std::string> names;  // empty, or one per element
  bool has_labels = false;
  edge_labeling labels;
  bool has_omega = false;
  natural_labeling omega;
};

// Accepts {"n": int, "covers": [[a,b],...]} with optional "names"
// (array of n strings), "labels" ([[a,b,"p/q"],...], "p" alone meaning an
// integer) and "omega" ([[element,value],...]).  Malformed documents raise
// std::invalid_argument; defective cover relations raise build_error from
// lattice::from_covers.
lattice_file parse_lattice_file(const std::string& text);
std::string serialize_lattice_file(const lattice_file& file);

ordered_json lattice_to_json(const lattice& l);
ordered_json labels_to_json(const edge_labeling& f);
ordered_json omega_to_json(const natural_labeling& omega);

// "1=1,2=3" -> {1:1, 2:3}; format of the --with-omega flag.
natural_labeling parse_omega_spec(const std::string& spec);

// Hasse diagram as DOT: nodes sorted by id, covers as bottom-to-top edges,
// rank levels emitted as same-rank groups when the lattice is ranked, edge
// labels attached when the file carries a labeling.  Byte-stable.
std::string render_dot(const lattice_file& file);

}  // namespace hasse
