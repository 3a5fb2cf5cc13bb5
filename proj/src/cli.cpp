#include "hasse/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hasse/admissibility.hpp"
#include "hasse/corpus.hpp"
#include "hasse/io.hpp"
#include "hasse/predicates.hpp"
#include "hasse/shelling.hpp"

namespace hasse {

namespace {

lattice_file load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_file(buf.str());
}

void emit(std::ostream& out, const ordered_json& rec) {
  out << rec.dump() << "\n";
}

const char* defect_name(el_defect d) {
  switch (d) {
    case el_defect::none: return "none";
    case el_defect::no_rising_chain: return "no_rising_chain";
    case el_defect::multiple_rising_chains: return "multiple_rising_chains";
    case el_defect::not_lex_first: return "not_lex_first";
  }
  return "none";
}

struct check_opts {
  std::string file;
  bool ranked = false, rank_connected = false, interval_connected = false;
  bool dismantlable = false, planar = false;
  bool upper_semimodular = false, lower_semimodular = false;
  int min_gap = 2;
};

int cmd_check(const check_opts& o, std::ostream& out, std::ostream& err) {
  const lattice l = load(o.file).lat;
  bool all = !(o.ranked || o.rank_connected || o.interval_connected ||
               o.dismantlable || o.planar || o.upper_semimodular ||
               o.lower_semimodular);
  int selected = 0, holding = 0;
  auto record = [&](const char* predicate, bool ok, ordered_json extra) {
    ordered_json rec = {{"record", "check"}, {"predicate", predicate},
                        {"ok", ok}};
    if (extra.is_object()) rec.update(extra);
    emit(out, rec);
    ++selected;
    holding += ok;
  };

  if (all || o.ranked) {
    rank_result r = rank_function(l);
    record("ranked", r.ok(),
           r.ok() ? ordered_json{{"ranks", *r.ranks}}
                  : ordered_json{{"chain_a", r.chain_a},
                                 {"chain_b", r.chain_b}});
  }
  if (all || o.rank_connected) {
    rank_connectivity_result r = is_rank_connected(l);
    ordered_json extra;
    if (!r.ok) {
      if (r.ranked)
        extra = {{"level", r.level}, {"components", r.components}};
      else
        extra = {{"chain_a", r.chain_a}, {"chain_b", r.chain_b}};
    }
    record("rank_connected", r.ok, extra);
  }
  if (all || o.interval_connected) {
    try {
      interval_connectivity_result r = is_interval_connected(l, o.min_gap);
      record("interval_connected", r.ok,
             r.ok ? ordered_json{}
                  : ordered_json{{"x", r.x}, {"y", r.y},
                                 {"components", r.components}});
    } catch (const not_ranked_error& e) {
      record("interval_connected", false,
             {{"chain_a", e.chain_a}, {"chain_b", e.chain_b}});
    }
  }
  if (all || o.dismantlable) {
    dismantle_result r = dismantling_sequence(l);
    record("dismantlable", r.ok,
           r.ok ? ordered_json{{"order", r.order}}
                : ordered_json{{"order", r.order}, {"stuck", r.stuck}});
  }
  if (all || o.planar) {
    planarity_result r = is_planar(l);
    record("planar", r.ok,
           r.ok ? ordered_json{{"sigma", r.sigma}} : ordered_json{});
  }
  if (all || o.upper_semimodular) {
    semimodularity_result r = is_upper_semimodular(l);
    record("upper_semimodular", r.ok,
           r.ok ? ordered_json{} : ordered_json{{"x", r.x}, {"y", r.y}});
  }
  if (all || o.lower_semimodular) {
    semimodularity_result r = is_lower_semimodular(l);
    record("lower_semimodular", r.ok,
           r.ok ? ordered_json{} : ordered_json{{"x", r.x}, {"y", r.y}});
  }
  err << holding << "/" << selected << " predicates hold\n";
  return holding == selected ? 0 : 1;
}

void emit_labeling(std::ostream& out, const edge_labeling& f) {
  for (const auto& [edge, value] : f)
    emit(out, {{"record", "label"}, {"a", edge.first}, {"b", edge.second},
               {"value", value.str()}});
}

ordered_json verdict_json(const el_verdict& v) {
  ordered_json rec = {{"record", "el_verdict"}, {"ok", v.ok},
                      {"defect", defect_name(v.defect)}};
  if (!v.ok) {
    rec["x"] = v.x;
    rec["y"] = v.y;
    if (!v.chain1.empty()) rec["chain1"] = v.chain1;
    if (!v.chain2.empty()) rec["chain2"] = v.chain2;
    if (v.first_step >= 0) rec["first_step"] = v.first_step;
    if (v.competitor >= 0) rec["competitor"] = v.competitor;
  }
  return rec;
}

int cmd_shell(const std::string& path, bool construct, bool verify,
              bool search, int max_labels, std::ostream& out,
              std::ostream& err) {
  lattice_file file = load(path);
  if (construct) {
    edge_labeling f = construct_el(file.lat);
    emit_labeling(out, f);
    emit(out, {{"record", "shell"}, {"op", "construct"}, {"ok", true}});
    err << "constructed a labeling of " << f.size() << " covers\n";
    return 0;
  }
  if (verify) {
    if (!file.has_labels) {
      err << "--verify needs a file with \"labels\"\n";
      return 2;
    }
    el_verdict v = verify_el(file.lat, file.labels);
    emit(out, verdict_json(v));
    err << (v.ok ? "labeling accepted\n"
                 : std::string("labeling rejected: ") + defect_name(v.defect) +
                       "\n");
    return v.ok ? 0 : 1;
  }
  (void)search;
  std::optional<edge_labeling> found = search_el(file.lat, max_labels);
  if (found) {
    emit_labeling(out, *found);
    emit(out, {{"record", "search"}, {"found", true}});
    err << "search found a labeling\n";
    return 0;
  }
  emit(out, {{"record", "search"}, {"found", false}});
  err << "search exhausted all label patterns\n";
  return 1;
}

int cmd_admissible(const std::string& path, const std::optional<std::string>& spec,
                   std::ostream& out, std::ostream& err) {
  lattice_file file = load(path);
  if (spec) {
    natural_labeling omega =
        spec->empty() && file.has_omega ? file.omega : parse_omega_spec(*spec);
    admissible_check r = check_admissible_with(file.lat, omega);
    ordered_json rec = {{"record", "admissible_check"}, {"ok", r.ok}};
    if (!r.ok) {
      rec["x"] = r.x;
      rec["y"] = r.y;
      rec["chains"] = r.chains;
    }
    emit(out, rec);
    err << (r.ok ? "labeling is admissible\n" : "labeling fails\n");
    return r.ok ? 0 : 1;
  }
  admissibility_result r = is_admissible(file.lat);
  ordered_json rec = {{"record", "admissible"}, {"ok", r.ok},
                      {"examined", r.examined}};
  if (r.ok) rec["omega"] = omega_to_json(r.omega);
  emit(out, rec);
  if (r.ok)
    err << "admissible after " << r.examined << " labelings\n";
  else
    err << "not admissible; exhausted " << r.examined << " labelings\n";
  return r.ok ? 0 : 1;
}

struct corpus_opts {
  std::optional<int> enumerate;
  std::vector<long long> random;  // count, size, seed
  bool cross = false;
};

int cmd_corpus(const corpus_opts& o, std::ostream& out, std::ostream& err) {
  cross_checker checker(o.cross ? &out : nullptr);
  long long index = 0;
  std::vector<std::pair<std::string, long long>> classes;
  auto handle = [&](const lattice& l, const std::vector<int>* certificate) {
    std::string name = shape_name(l);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return c.first == name; });
    if (it == classes.end())
      classes.push_back({name, 1});
    else
      ++it->second;
    if (o.cross) {
      checker.feed(l);
    } else {
      emit(out, {{"record", "lattice"}, {"index", index}, {"name", name},
                 {"n", l.size()},
                 {"covers", lattice_to_json(l)["covers"]}});
    }
    if (certificate)
      emit(out, {{"record", "certificate"}, {"index", index},
                 {"elements", *certificate}});
    ++index;
  };

  if (o.enumerate) {
    enumerate_lattices(*o.enumerate, [&](const lattice& l) {
      handle(l, nullptr);
      return true;
    });
  } else {
    for (long long i = 0; i < o.random[0]; ++i) {
      random_lattice rl = random_dismantlable(
          static_cast<int>(o.random[1]),
          static_cast<unsigned long long>(o.random[2]) + i);
      handle(rl.lat, &rl.certificate);
    }
  }

  std::sort(classes.begin(), classes.end());
  ordered_json summary = {{"record", "summary"}, {"lattices", index}};
  ordered_json cls = ordered_json::array();
  for (const auto& [name, count] : classes) cls.push_back({name, count});
  summary["classes"] = cls;
  if (o.cross) {
    const cross_check_report& r = checker.report();
    summary["interval_connected_checked"] = r.interval_connected_checked;
    summary["labelings_constructed"] = r.labelings_constructed;
    summary["rank_not_interval"] = r.rank_not_interval;
    summary["admissible_confirmed"] = r.admissible_confirmed;
    summary["admissible_unchecked"] = r.admissible_unchecked;
    summary["admissibility_skipped"] = r.admissibility_skipped;
    summary["violations"] = 0;
  }
  emit(out, summary);

  for (size_t i = 0; i < classes.size(); ++i)
    err << (i ? " " : "") << classes[i].first << ":" << classes[i].second;
  if (!classes.empty()) err << "\n";
  err << "total " << index << "\n";
  if (o.cross) {
    const cross_check_report& r = checker.report();
    err << "interval-connected checked: " << r.interval_connected_checked
        << "\n";
    err << "labelings constructed: " << r.labelings_constructed << "\n";
    err << "rank-connected non-interval-connected: " << r.rank_not_interval
        << "\n";
    err << "admissible confirmed: " << r.admissible_confirmed
        << ", unchecked: " << r.admissible_unchecked
        << ", skipped: " << r.admissibility_skipped << "\n";
    err << "no violations\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite lattice structure toolkit"};
  app.require_subcommand(1);

  check_opts check;
  CLI::App* c_check = app.add_subcommand(
      "check", "decide structural predicates of a lattice file");
  c_check->add_option("file", check.file, "lattice file")->required();
  c_check->add_flag("--ranked", check.ranked, "all maximal chains equal");
  c_check->add_flag("--rank-connected", check.rank_connected,
                    "adjacent rank levels connected");
  c_check->add_flag("--interval-connected", check.interval_connected,
                    "open intervals connected");
  c_check->add_flag("--dismantlable", check.dismantlable,
                    "removable doubly irreducible chain");
  c_check->add_flag("--planar", check.planar, "order dimension at most two");
  c_check->add_flag("--upper-semimodular", check.upper_semimodular,
                    "covers push up across joins");
  c_check->add_flag("--lower-semimodular", check.lower_semimodular,
                    "covers push down across meets");
  c_check->add_option("--min-gap", check.min_gap,
                      "smallest interval height checked")
      ->capture_default_str();

  std::string shell_file;
  bool sh_construct = false, sh_verify = false, sh_search = false;
  int max_labels = 0;
  CLI::App* c_shell = app.add_subcommand(
      "shell", "construct, verify or search edge labelings");
  c_shell->add_option("file", shell_file, "lattice file")->required();
  CLI::Option_group* mode = c_shell->add_option_group("mode");
  mode->add_flag("--construct", sh_construct, "build a labeling");
  mode->add_flag("--verify", sh_verify, "check the file's labels");
  mode->add_flag("--search", sh_search, "exhaustive labeling search");
  mode->require_option(1);
  c_shell->add_option("--max-labels", max_labels,
                      "distinct labels for --search (0: one per cover)")
      ->capture_default_str();

  std::string adm_file;
  std::string omega_spec;
  CLI::App* c_adm = app.add_subcommand(
      "admissible", "search natural labelings of the join-irreducibles");
  c_adm->add_option("file", adm_file, "lattice file")->required();
  CLI::Option* with_omega = c_adm->add_option(
      "--with-omega", omega_spec, "check one labeling, e.g. \"1=1,2=2\"");

  std::string render_file;
  CLI::App* c_render =
      app.add_subcommand("render", "emit the Hasse diagram as DOT");
  c_render->add_option("file", render_file, "lattice file")->required();

  corpus_opts corpus;
  int enum_n = 0;
  CLI::App* c_corpus = app.add_subcommand(
      "corpus", "enumerate or sample lattices and cross-check implications");
  CLI::Option_group* source = c_corpus->add_option_group("source");
  CLI::Option* enum_opt =
      source->add_option("--enumerate", enum_n, "classes with this many elements");
  source->add_option("--random", corpus.random, "COUNT SIZE SEED")
      ->expected(3);
  source->require_option(1);
  c_corpus->add_flag("--cross-check", corpus.cross,
                     "validate the implication battery");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_check) return cmd_check(check, out, err);
    if (*c_shell)
      return cmd_shell(shell_file, sh_construct, sh_verify, sh_search,
                       max_labels, out, err);
    if (*c_adm) {
      std::optional<std::string> spec;
      if (with_omega->count()) spec = omega_spec;
      return cmd_admissible(adm_file, spec, out, err);
    }
    if (*c_render) {
      out << render_dot(load(render_file));
      return 0;
    }
    if (*c_corpus) {
      if (enum_opt->count()) corpus.enumerate = enum_n;
      return cmd_corpus(corpus, out, err);
    }
  } catch (const implication_violated_error& e) {
    emit(out, {{"record", "error"}, {"kind", "implication_violated"},
               {"implication", e.implication},
               {"lattice", ordered_json::parse(e.lattice_json)}});
    err << e.what() << "\n";
    return 1;
  } catch (const size_limit_error& e) {
    emit(out, {{"record", "error"}, {"kind", "size_limit"}, {"op", e.op},
               {"limit", e.limit}, {"actual", e.actual}});
    err << e.what() << "\n";
    return 1;
  } catch (const precondition_error& e) {
    emit(out, {{"record", "error"}, {"kind", "precondition_failed"},
               {"reason", e.reason}});
    err << e.what() << "\n";
    return 1;
  } catch (const partial_labeling_error& e) {
    emit(out, {{"record", "error"}, {"kind", "partial_labeling"},
               {"a", e.a}, {"b", e.b}, {"missing", e.missing}});
    err << e.what() << "\n";
    return 1;
  } catch (const not_ranked_error& e) {
    emit(out, {{"record", "error"}, {"kind", "not_ranked"},
               {"chain_a", e.chain_a}, {"chain_b", e.chain_b}});
    err << e.what() << "\n";
    return 1;
  } catch (const build_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hasse
