#pragma once

#include "teich/exppoly.hpp"
#include "teich/fatgraph.hpp"
#include "teich/geodesics.hpp"
#include "teich/mcg.hpp"
#include "teich/report.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace teich {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json graph_to_json(const FatGraph& g) { return {{"sigma", g.sigma()}, {"z", g.labels()}}; }

/// {"sigma": [...], "z": [...]}; labels may be numbers or "p/q" strings.
inline FatGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sigma") || !j.contains("z"))
    throw FormatError("graph JSON needs \"sigma\" and \"z\"");
  const json& s = j.at("sigma");
  const json& z = j.at("z");
  if (!s.is_array() || !z.is_array()) throw FormatError("\"sigma\" and \"z\" must be arrays");
  std::vector<int> sigma;
  for (const json& v : s) {
    if (!v.is_number_integer()) throw FormatError("sigma entries must be integers");
    sigma.push_back(v.get<int>());
  }
  std::vector<double> labels;
  for (const json& v : z) {
    if (v.is_number()) labels.push_back(v.get<double>());
    else if (v.is_string()) {
      try {
        labels.push_back(to_double(parse_rational(v.get<std::string>())));
      } catch (const std::exception&) {
        throw FormatError("bad rational label \"" + v.get<std::string>() + "\"");
      }
    } else throw FormatError("labels must be numbers or rational strings");
  }
  return FatGraph(std::move(sigma), std::move(labels));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline FatGraph read_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

inline json topology_to_json(const Topology& t) {
  return {{"vertices", t.vertices}, {"edges", t.edges}, {"faces", t.faces}, {"genus", t.genus}, {"holes", t.holes}};
}

inline json to_json(const ExpPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exp", m}, {"coeff", to_string(c)}});
  return {{"dim", f.dim()}, {"terms", terms}};
}

inline ExpPoly exppoly_from_json(const json& j) {
  ExpPoly f(j.at("dim").get<int>());
  for (const json& t : j.at("terms")) f.add_term(t.at("exp").get<ExpVector>(), parse_rational(t.at("coeff").get<std::string>()));
  return f;
}

inline json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({{"rho_power", k}, {"coeff", c.str()}});
  return out;
}

inline json to_json(const QExpPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exp", m}, {"coeff", to_json(c)}});
  return {{"dim", f.dim()}, {"terms", terms}};
}

inline json to_json(const CheckReport& r, bool timing = false) {
  json j = {{"check", r.name}, {"status", r.passed ? "pass" : "fail"}, {"lhs", r.lhs}, {"rhs", r.rhs}};
  if (r.residual) {
    j["residual"] = *r.residual;
    j["tolerance"] = r.tolerance;
  } else {
    j["residual"] = "exact";
  }
  if (r.seed) j["seed"] = *r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline json to_json(const FlipRecord& r) {
  return {{"edge", r.edge},
          {"corner_darts", r.corner_darts},
          {"corners", r.corners},
          {"before", graph_to_json(r.before)},
          {"after", graph_to_json(r.after)}};
}

/// "0,5" or "0 5" or "[0,5]".
inline PathWord parse_path(const std::string& text) {
  std::string s;
  for (char ch : text) s += (ch == ',' || ch == '[' || ch == ']') ? ' ' : ch;
  std::istringstream in(s);
  PathWord p;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw FormatError("bad dart \"" + tok + "\" in path");
    p.push_back(v);
  }
  return p;
}

}  // namespace teich
