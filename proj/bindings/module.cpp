#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hasse/admissibility.hpp"
#include "hasse/cli.hpp"
#include "hasse/corpus.hpp"
#include "hasse/errors.hpp"
#include "hasse/io.hpp"
#include "hasse/lattice.hpp"
#include "hasse/predicates.hpp"
#include "hasse/shelling.hpp"

namespace py = pybind11;

namespace {

using namespace hasse;

// Exact labels cross the boundary as fractions.Fraction, never floats.
py::object to_fraction(const rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.num(), r.den());
}

rational to_rational(py::handle h) {
  if (py::isinstance<py::int_>(h)) return rational(h.cast<long long>());
  if (py::isinstance<py::str>(h)) return rational::parse(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return rational(h.attr("numerator").cast<long long>(),
                    h.attr("denominator").cast<long long>());
  }
  throw py::type_error("label must be an int, a 'p/q' string or a Fraction");
}

py::dict labels_to_py(const edge_labeling& f) {
  py::dict d;
  for (const auto& [cover, value] : f)
    d[py::make_tuple(cover.first, cover.second)] = to_fraction(value);
  return d;
}

edge_labeling labels_from_py(const py::dict& d) {
  edge_labeling f;
  for (auto item : d)
    f[item.first.cast<cover_pair>()] = to_rational(item.second);
  return f;
}

const char* defect_name(el_defect d) {
  switch (d) {
    case el_defect::none: return "none";
    case el_defect::no_rising_chain: return "no_rising_chain";
    case el_defect::multiple_rising_chains: return "multiple_rising_chains";
    case el_defect::not_lex_first: return "not_lex_first";
  }
  return "unknown";
}

py::dict rank_dict(const rank_result& r) {
  py::dict d;
  d["ok"] = r.ok();
  if (r.ok()) {
    d["ranks"] = *r.ranks;
  } else {
    d["chain_a"] = r.chain_a;
    d["chain_b"] = r.chain_b;
  }
  return d;
}

py::dict rank_connected_dict(const rank_connectivity_result& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["ranked"] = r.ranked;
  if (!r.ranked) {
    d["chain_a"] = r.chain_a;
    d["chain_b"] = r.chain_b;
    return d;
  }
  d["ranks"] = r.ranks;
  if (!r.ok) {
    d["level"] = r.level;
    d["components"] = r.components;
  }
  return d;
}

py::dict interval_connected_dict(const interval_connectivity_result& r) {
  py::dict d;
  d["ok"] = r.ok;
  if (!r.ok) {
    d["x"] = r.x;
    d["y"] = r.y;
    d["components"] = r.components;
  }
  return d;
}

py::dict dismantle_dict(const dismantle_result& r) {
  py::dict d;
  d["ok"] = r.ok;
  if (r.ok) d["order"] = r.order;
  else d["stuck"] = r.stuck;
  return d;
}

py::dict planar_dict(const planarity_result& r) {
  py::dict d;
  d["ok"] = r.ok;
  if (r.ok) d["sigma"] = r.sigma;
  return d;
}

py::dict semimodular_dict(const semimodularity_result& r) {
  py::dict d;
  d["ok"] = r.ok;
  if (!r.ok) {
    d["x"] = r.x;
    d["y"] = r.y;
  }
  return d;
}

py::dict verdict_dict(const el_verdict& v) {
  py::dict d;
  d["ok"] = v.ok;
  d["defect"] = defect_name(v.defect);
  if (!v.ok) {
    d["x"] = v.x;
    d["y"] = v.y;
    if (!v.chain1.empty()) d["chain1"] = v.chain1;
    if (!v.chain2.empty()) d["chain2"] = v.chain2;
    if (v.first_step >= 0) d["first_step"] = v.first_step;
    if (v.competitor >= 0) d["competitor"] = v.competitor;
  }
  return d;
}

py::dict admissible_check_dict(const admissible_check& r) {
  py::dict d;
  d["ok"] = r.ok;
  if (!r.ok) {
    d["x"] = r.x;
    d["y"] = r.y;
    d["chains"] = r.chains;
  }
  return d;
}

py::dict admissibility_dict(const admissibility_result& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["examined"] = r.examined;
  if (r.ok) d["omega"] = r.omega;
  return d;
}

py::dict report_dict(const cross_check_report& r) {
  py::dict d;
  d["lattices"] = r.lattices;
  d["interval_connected_checked"] = r.interval_connected_checked;
  d["labelings_constructed"] = r.labelings_constructed;
  d["rank_not_interval"] = r.rank_not_interval;
  d["admissible_confirmed"] = r.admissible_confirmed;
  d["admissible_unchecked"] = r.admissible_unchecked;
  d["admissibility_skipped"] = r.admissibility_skipped;
  return d;
}

py::dict file_to_py(const lattice_file& file) {
  py::dict d;
  d["lattice"] = file.lat;
  d["names"] = file.names.empty() ? py::object(py::none())
                                  : py::object(py::cast(file.names));
  d["labels"] = file.has_labels ? py::object(labels_to_py(file.labels))
                                : py::object(py::none());
  d["omega"] = file.has_omega ? py::object(py::cast(file.omega))
                              : py::object(py::none());
  return d;
}

lattice_file file_from_py(const lattice& l, const py::object& names,
                          const py::object& labels, const py::object& omega) {
  lattice_file file;
  file.lat = l;
  if (!names.is_none()) file.names = names.cast<std::vector<std::string>>();
  if (!labels.is_none()) {
    file.has_labels = true;
    file.labels = labels_from_py(labels.cast<py::dict>());
  }
  if (!omega.is_none()) {
    file.has_omega = true;
    file.omega = omega.cast<natural_labeling>();
  }
  return file;
}

}  // namespace

PYBIND11_MODULE(_hasse, m) {
  using namespace hasse;

  m.doc() =
      "Finite lattices as Hasse diagrams: structural predicates with "
      "machine-checkable certificates, lexicographic shellability, "
      "admissible labelings, enumeration and cross-checking.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<build_error>(m, "BuildError", PyExc_ValueError);
  py::register_exception<size_limit_error>(m, "SizeLimitError",
                                           PyExc_RuntimeError);
  py::register_exception<implication_violated_error>(
      m, "ImplicationViolatedError", PyExc_RuntimeError);

  py::class_<lattice>(m, "Lattice",
                      "Immutable finite lattice over element ids 0..n-1, "
                      "built from its cover relation.")
      .def(py::init([](int n, const std::vector<cover_pair>& covers) {
             return lattice::from_covers(n, covers);
           }),
           py::arg("n"), py::arg("covers"))
      .def(py::init([](const std::vector<cover_pair>& covers) {
             return lattice::from_covers(covers);
           }),
           py::arg("covers"))
      .def_property_readonly("n", &lattice::size)
      .def_property_readonly(
          "covers", [](const lattice& l) { return l.covers(); })
      .def_property_readonly("bottom", &lattice::bottom)
      .def_property_readonly("top", &lattice::top)
      .def("leq", &lattice::leq, py::arg("x"), py::arg("y"))
      .def("meet", &lattice::meet, py::arg("x"), py::arg("y"))
      .def("join", &lattice::join, py::arg("x"), py::arg("y"))
      .def("upper_covers",
           [](const lattice& l, int x) { return l.upper_covers(x); },
           py::arg("x"))
      .def("lower_covers",
           [](const lattice& l, int x) { return l.lower_covers(x); },
           py::arg("x"))
      .def("height", &lattice::height, py::arg("x"))
      .def("__len__", &lattice::size)
      .def("__repr__", [](const lattice& l) {
        return "Lattice(n=" + std::to_string(l.size()) + ", covers=" +
               std::to_string(l.covers().size()) + ")";
      });

  m.def("canonical_form",
        [](const lattice& l) { return py::bytes(canonical_form(l)); },
        py::arg("lattice"),
        "Isomorphism-invariant byte string: equal iff isomorphic.");

  m.def("doubly_irreducibles", &doubly_irreducibles, py::arg("lattice"));
  m.def("join_irreducibles", &join_irreducibles, py::arg("lattice"));

  m.def("rank_function",
        [](const lattice& l) { return rank_dict(rank_function(l)); },
        py::arg("lattice"));
  m.def("is_rank_connected",
        [](const lattice& l) {
          return rank_connected_dict(is_rank_connected(l));
        },
        py::arg("lattice"));
  m.def("is_interval_connected",
        [](const lattice& l, int min_gap) {
          return interval_connected_dict(is_interval_connected(l, min_gap));
        },
        py::arg("lattice"), py::arg("min_gap") = 2);
  m.def("dismantling_sequence",
        [](const lattice& l) {
          return dismantle_dict(dismantling_sequence(l));
        },
        py::arg("lattice"));
  m.def("is_planar",
        [](const lattice& l, int max_n) {
          return planar_dict(is_planar(l, max_n));
        },
        py::arg("lattice"), py::arg("max_n") = 20);
  m.def("is_upper_semimodular",
        [](const lattice& l) {
          return semimodular_dict(is_upper_semimodular(l));
        },
        py::arg("lattice"));
  m.def("is_lower_semimodular",
        [](const lattice& l) {
          return semimodular_dict(is_lower_semimodular(l));
        },
        py::arg("lattice"));

  m.def("construct_el",
        [](const lattice& l) { return labels_to_py(construct_el(l)); },
        py::arg("lattice"),
        "Labeling accepted by verify_el; requires rank-connected and "
        "dismantlable input.");
  m.def("verify_el",
        [](const lattice& l, const py::dict& labels) {
          return verdict_dict(verify_el(l, labels_from_py(labels)));
        },
        py::arg("lattice"), py::arg("labels"));
  m.def("search_el",
        [](const lattice& l, int max_labels) -> py::object {
          std::optional<edge_labeling> found = search_el(l, max_labels);
          if (!found) return py::none();
          return labels_to_py(*found);
        },
        py::arg("lattice"), py::arg("max_labels") = 0,
        "Exhaustive labeling search; None when no labeling exists.");
  m.def("rising_chains",
        [](const lattice& l, const py::dict& labels, int x, int y) {
          return rising_chains(l, labels_from_py(labels), x, y);
        },
        py::arg("lattice"), py::arg("labels"), py::arg("x"), py::arg("y"));

  m.def("gamma_labeling",
        [](const lattice& l, const natural_labeling& omega) {
          return labels_to_py(gamma_labeling(l, omega));
        },
        py::arg("lattice"), py::arg("omega"));
  m.def("check_admissible_with",
        [](const lattice& l, const natural_labeling& omega) {
          return admissible_check_dict(check_admissible_with(l, omega));
        },
        py::arg("lattice"), py::arg("omega"));
  m.def("is_admissible",
        [](const lattice& l, int max_j) {
          return admissibility_dict(is_admissible(l, max_j));
        },
        py::arg("lattice"), py::arg("max_j") = 8);
  m.def("enumerate_natural_labelings",
        [](const lattice& l, const py::function& visit, int max_j) {
          return enumerate_natural_labelings(
              l,
              [&](const natural_labeling& omega) {
                return visit(omega).cast<bool>();
              },
              max_j);
        },
        py::arg("lattice"), py::arg("visit"), py::arg("max_j") = 8,
        "Streams order-preserving labelings of the join-irreducibles; the "
        "visitor returns False to stop early.");

  m.def("fixture_names", [] { return fixture_names(); });
  m.def("get_fixture",
        [](const std::string& name) {
          fixture f = get_fixture(name);
          py::dict d;
          d["name"] = f.name;
          d["lattice"] = f.lat;
          py::list claims;
          for (const fixture_claim& c : f.claims)
            claims.append(py::make_tuple(c.predicate, c.expected));
          d["claims"] = claims;
          return d;
        },
        py::arg("name"));
  m.def("evaluate_claim", &evaluate_claim, py::arg("lattice"),
        py::arg("predicate"));
  m.def("shape_name", &shape_name, py::arg("lattice"));

  m.def("enumerate_lattices",
        [](int n) {
          std::vector<lattice> all;
          enumerate_lattices(n, [&](const lattice& l) {
            all.push_back(l);
            return true;
          });
          return all;
        },
        py::arg("n"),
        "All lattices on n elements up to isomorphism (n <= 10).");
  m.def("random_dismantlable",
        [](int n, unsigned long long seed) {
          random_lattice r = random_dismantlable(n, seed);
          return py::make_tuple(r.lat, r.certificate);
        },
        py::arg("n"), py::arg("seed"),
        "Seeded random dismantlable lattice with its removal certificate.");
  m.def("cross_check",
        [](const std::vector<lattice>& batch) {
          return report_dict(cross_check(batch));
        },
        py::arg("batch"),
        "Validates the implication battery over a batch; raises "
        "ImplicationViolatedError on any counterexample.");

  m.def("parse_lattice_file",
        [](const std::string& text) {
          return file_to_py(parse_lattice_file(text));
        },
        py::arg("text"));
  m.def("serialize_lattice_file",
        [](const lattice& l, const py::object& names, const py::object& labels,
           const py::object& omega) {
          return serialize_lattice_file(file_from_py(l, names, labels, omega));
        },
        py::arg("lattice"), py::arg("names") = py::none(),
        py::arg("labels") = py::none(), py::arg("omega") = py::none());
  m.def("render_dot",
        [](const lattice& l, const py::object& names,
           const py::object& labels) {
          return render_dot(file_from_py(l, names, labels, py::none()));
        },
        py::arg("lattice"), py::arg("names") = py::none(),
        py::arg("labels") = py::none());
  m.def("parse_omega_spec", &parse_omega_spec, py::arg("spec"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Runs the command line front end in-process; returns "
        "(exit_code, stdout, stderr).");
}
