#include "hasse/io.hpp"

#include <sstream>
#include <stdexcept>

namespace hasse {

namespace {

long long int_field(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("expected an integer for ") + what);
  return j.get<long long>();
}

std::pair<int, int> int_pair(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(std::string(what) + " entries must be pairs");
  return {static_cast<int>(int_field(j[0], what)),
          static_cast<int>(int_field(j[1], what))};
}

}  // namespace

lattice_file parse_lattice_file(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed lattice file: ") +
                                e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("lattice file must be a JSON object");
  if (!doc.contains("n") || !doc.contains("covers"))
    throw std::invalid_argument("lattice file needs \"n\" and \"covers\"");

  long long n = int_field(doc["n"], "\"n\"");
  if (n < 1 || n > 1'000'000)
    throw std::invalid_argument("\"n\" out of range");
  if (!doc["covers"].is_array())
    throw std::invalid_argument("\"covers\" must be an array");
  std::vector<cover_pair> covers;
  for (const auto& entry : doc["covers"])
    covers.push_back(int_pair(entry, "\"covers\""));

  lattice_file file;
  file.lat = lattice::from_covers(static_cast<int>(n), covers);

  if (doc.contains("names")) {
    if (!doc["names"].is_array() ||
        static_cast<long long>(doc["names"].size()) != n)
      throw std::invalid_argument("\"names\" must list one string per element");
    for (const auto& entry : doc["names"]) {
      if (!entry.is_string())
        throw std::invalid_argument("\"names\" must list one string per element");
      file.names.push_back(entry.get<std::string>());
    }
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw std::invalid_argument("\"labels\" must be an array");
    for (const auto& entry : doc["labels"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_string())
        throw std::invalid_argument(
            "\"labels\" entries must be [a, b, \"p/q\"] triples");
      auto [a, b] = int_pair(ordered_json{entry[0], entry[1]}, "\"labels\"");
      file.labels[{a, b}] = rational::parse(entry[2].get<std::string>());
    }
    file.has_labels = true;
  }
  if (doc.contains("omega")) {
    if (!doc["omega"].is_array())
      throw std::invalid_argument("\"omega\" must be an array");
    for (const auto& entry : doc["omega"]) {
      auto [elem, value] = int_pair(entry, "\"omega\"");
      file.omega[elem] = value;
    }
    file.has_omega = true;
  }
  return file;
}

ordered_json lattice_to_json(const lattice& l) {
  ordered_json covers = ordered_json::array();
  for (const auto& [a, b] : l.covers()) covers.push_back({a, b});
  return ordered_json{{"n", l.size()}, {"covers", covers}};
}

ordered_json labels_to_json(const edge_labeling& f) {
  ordered_json out = ordered_json::array();
  for (const auto& [edge, value] : f)
    out.push_back({edge.first, edge.second, value.str()});
  return out;
}

ordered_json omega_to_json(const natural_labeling& omega) {
  ordered_json out = ordered_json::array();
  for (const auto& [elem, value] : omega) out.push_back({elem, value});
  return out;
}

std::string serialize_lattice_file(const lattice_file& file) {
  ordered_json doc = lattice_to_json(file.lat);
  if (!file.names.empty()) doc["names"] = file.names;
  if (file.has_labels) doc["labels"] = labels_to_json(file.labels);
  if (file.has_omega) doc["omega"] = omega_to_json(file.omega);
  return doc.dump(2) + "\n";
}

natural_labeling parse_omega_spec(const std::string& spec) {
  natural_labeling omega;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("omega entries look like ELEM=VALUE: " + part);
    try {
      omega[std::stoi(part.substr(0, eq))] = std::stoi(part.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("omega entries look like ELEM=VALUE: " + part);
    }
  }
  return omega;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_dot(const lattice_file& file) {
  const lattice& l = file.lat;
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, style=rounded];\n";
  for (int v = 0; v < l.size(); ++v) {
    std::string name =
        file.names.empty() ? std::to_string(v) : file.names[v];
    out << "  " << v << " [label=" << quote(name) << "];\n";
  }
  if (rank_result r = rank_function(l); r.ok()) {
    for (const auto& level : rank_levels(l, *r.ranks)) {
      out << "  { rank=same;";
      for (int v : level) out << " " << v << ";";
      out << " }\n";
    }
  }
  for (const auto& [a, b] : l.covers()) {
    out << "  " << a << " -> " << b;
    if (file.has_labels) {
      auto it = file.labels.find({a, b});
      if (it != file.labels.end())
        out << " [label=" << quote(it->second.str()) << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hasse
