#pragma once

// Command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage, IO or format error.

#include "teich/exppoly.hpp"
#include "teich/fatgraph.hpp"
#include "teich/geodesics.hpp"
#include "teich/json_io.hpp"
#include "teich/mcg.hpp"
#include "teich/quantum.hpp"
#include "teich/report.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace teich::cli {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct CheckOptions {
  std::string graph = "torus";
  std::uint64_t seed = kDefaultSeed;
  int cases = 100;
  double z = 1.0;
  double hbar = 0.3;
};

inline FatGraph load_graph(const std::string& source) {
  if (source == "torus") return once_punctured_torus();
  if (source == "tetrahedron") return tetrahedron();
  return read_graph(source);
}

inline void require_torus(const FatGraph& g, const std::string& check) {
  if (!is_standard_torus(g))
    throw std::invalid_argument(check + " is built on the once-punctured torus pair; use --graph torus");
}

inline std::string path_string(const PathWord& p) { return json(p).dump(); }

template <class Rng>
std::vector<double> random_labels(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> z(n);
  for (double& x : z) x = u(rng);
  return z;
}

/// Keeps the worst residual over a sweep.
struct Sweep {
  double worst = 0.0;
  void add(double r) { worst = std::max(worst, r); }
};

inline std::vector<CheckReport> check_skein(const FatGraph& g, const CheckOptions& o) {
  std::vector<CheckReport> out;
  if (is_standard_torus(g)) out.push_back(skein_check(g, torus_paths::A, torus_paths::B));
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < o.cases; ++k) {
    const int start = static_cast<int>(rng() % g.dart_count());
    const PathWord p = random_closed_path(g, start, rng, 8), q = random_closed_path(g, start, rng, 8);
    CheckReport r = skein_check(g, p, q);
    r.name = "skein-random";
    r.seed = o.seed;
    r.note = "P=" + path_string(p) + " Q=" + path_string(q);
    if (r.passed) r.lhs = r.rhs = "";
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CheckReport> check_goldman(const FatGraph& g, const CheckOptions&) {
  require_torus(g, "goldman");
  const OmegaMatrix w = omega_matrix(g);
  std::vector<CheckReport> out{goldman_check(g, torus_paths::A, torus_paths::B, w), torus_algebra_check(g)};
  const ExpPoly ga = geodesic_function(g, torus_paths::A);
  const ExpPoly aa = poisson_bracket(ga, ga, w);
  out.push_back(exact_report("goldman-self", aa.is_zero(), to_string(aa), "0"));
  return out;
}

inline std::vector<CheckReport> check_casimir(const FatGraph& g, const CheckOptions& o) {
  require_torus(g, "casimir");
  const OmegaMatrix w = omega_matrix(g);
  const ExpPoly c = torus_casimir(g);
  std::vector<CheckReport> out;
  for (const auto& [name, p] : {std::pair{"A", torus_paths::A}, std::pair{"B", torus_paths::B},
                                std::pair{"AB^-1", torus_paths::AB_inv}}) {
    const ExpPoly br = poisson_bracket(c, geodesic_function(g, p), w);
    out.push_back(exact_report(std::string("casimir-central-") + name, br.is_zero(), to_string(br), "0"));
  }
  std::mt19937_64 rng(o.seed);
  Sweep flip_inv, perimeter_only;
  for (int k = 0; k < o.cases; ++k) {
    const auto z = random_labels(3, rng);
    const auto m = torus_flip_map({z[0], z[1], z[2]});
    const double before = eval(c, z);
    flip_inv.add(std::abs(eval(c, std::vector<double>(m.begin(), m.end())) - before) / std::max(1.0, std::abs(before)));
    // Same perimeter, different labels.
    const double shift = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    const std::vector<double> z2{z[0] + shift, z[1] - shift, z[2]};
    perimeter_only.add(std::abs(eval(c, z2) - before) / std::max(1.0, std::abs(before)));
  }
  CheckReport inv = numeric_report("casimir-flip-invariance", flip_inv.worst, 1e-10, "C(flip z)", "C(z)");
  CheckReport per = numeric_report("casimir-perimeter-only", perimeter_only.worst, 1e-10, "C(z')", "C(z)");
  inv.seed = per.seed = o.seed;
  out.push_back(inv);
  out.push_back(per);
  return out;
}

inline std::vector<CheckReport> check_relations_suite(const FatGraph& g, const CheckOptions& o) {
  std::vector<CheckReport> out;
  std::mt19937_64 rng(o.seed);
  const int n = g.edge_count();
  std::vector<std::vector<double>> labels;
  for (int k = 0; k < o.cases; ++k) labels.push_back(random_labels(n, rng));

  auto sweep = [&](const std::string& name, auto&& one) {
    Sweep s;
    bool structural = true;
    for (const auto& z : labels) {
      const CheckReport r = one(g.with_labels(z));
      if (!r.residual) structural = false;
      else s.add(*r.residual);
    }
    CheckReport r = structural ? numeric_report(name, s.worst, 1e-12) : exact_report(name, false, "graph", "not isomorphic");
    r.seed = o.seed;
    out.push_back(std::move(r));
  };

  for (int e = 0; e < n; ++e) {
    if (g.vertex_of(2 * e) == g.vertex_of(2 * e + 1)) continue;
    sweep("involution-edge-" + std::to_string(e),
          [&](const FatGraph& h) { return check_relations(RelationMode::Involution, h, {e}); });
    Sweep per;
    for (const auto& z : labels) {
      const FatGraph h = g.with_labels(z);
      const auto a = perimeters(h), b = perimeters(flip(h, e).after);
      for (std::size_t i = 0; i < a.size(); ++i) per.add(std::abs(a[i] - b[i]));
    }
    CheckReport r = numeric_report("perimeter-edge-" + std::to_string(e), per.worst, 1e-12);
    r.seed = o.seed;
    out.push_back(std::move(r));
  }
  const bool simple = is_simple_graph(g);
  for (int e1 = 0; e1 < n; ++e1)
    for (int e2 = e1 + 1; e2 < n; ++e2) {
      const int shared = shared_vertices(g, e1, e2);
      const std::string tag = std::to_string(e1) + "-" + std::to_string(e2);
      if (shared == 0)
        sweep("commute-" + tag, [&](const FatGraph& h) { return check_relations(RelationMode::Commute, h, {e1, e2}); });
      else if (shared == 1 && simple)
        sweep("pentagon-" + tag, [&](const FatGraph& h) { return check_relations(RelationMode::Pentagon, h, {e1, e2}); });
    }
  if (is_standard_torus(g)) {
    Sweep s;
    for (const auto& z : labels) s.add(*torus_modular_check({z[0], z[1], z[2]}).residual);
    CheckReport r = numeric_report("torus-modular", s.worst, 1e-12, "U', V'", "1/U, e^{l/2}/(V(U+1/U))");
    r.seed = o.seed;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CheckReport> check_qskein(const FatGraph& g, const CheckOptions& o) {
  require_torus(g, "qskein");
  const OmegaMatrix w = omega_matrix(g);
  const QGeodesic a = quantum_geodesic(g, torus_paths::A), b = quantum_geodesic(g, torus_paths::B);
  const QGeodesic x = quantum_geodesic(g, torus_paths::AB_inv);
  std::vector<CheckReport> out;

  const QSkeinResult s = qskein_decompose(g, a, b, x);
  CheckReport sk = exact_report("qskein-decompose", s.passed(), "A o B",
                                to_string(rho(-2)) + " G_AB + " + to_string(s.ab_inv_coeff) + " G_AB^-1");
  sk.note = "G_AB = " + to_string(s.g_ab) + "; ordering corrections: " + (s.corrections.empty() ? "none" : s.corrections);
  out.push_back(std::move(sk));

  const QCommutatorResult qc = qcommutator_check(g, a, b, x.op);
  CheckReport c = exact_report("qcommutator", qc.passed(), "q^{1/2} A o B - q^{-1/2} B o A",
                               (qc.factor ? to_string(*qc.factor) : std::string("not proportional")) + " * G_AB^-1");
  c.note = std::string("c(rho) ") + (qc.matches_q ? "= q - q^{-1}" : qc.matches_sqrt_q ? "= q^{1/2} - q^{-1/2}" : "is neither q - q^{-1} nor q^{1/2} - q^{-1/2}");
  out.push_back(std::move(c));

  const EmptyLoopResult el = empty_loop_constant(g, a);
  CheckReport e = exact_report("empty-loop", el.scalar && el.scalar->at_one() == 2 && el.candidate_classical,
                               "A o A - G_{A^2}", el.scalar ? to_string(*el.scalar) : std::string("not scalar"));
  e.note = el.relation;
  out.push_back(std::move(e));

  bool hermitian = true, central = true;
  for (const QGeodesic* q : {&a, &b, &x}) {
    hermitian = hermitian && is_star_fixed(q->op);
    for (const Face& f : g.faces()) {
      const QExpPoly p = QExpPoly::monomial(face_multiplicity(g, f));
      central = central && qmul(p, q->op, w) == qmul(q->op, p, w);
    }
  }
  out.push_back(exact_report("quantum-hermitian", hermitian, "star(G)", "G"));
  out.push_back(exact_report("quantum-face-central", central, "e^{P/2} o G", "G o e^{P/2}"));

  std::mt19937_64 rng(o.seed);
  bool limit_ok = classical_limit_commutator(a.op, b.op, w) == poisson_bracket(specialize(a.op), specialize(b.op), w);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int k = 0; k < o.cases; ++k) {
    ExpVector m(g.edge_count()), n(g.edge_count());
    for (int& v : m) v = u(rng);
    for (int& v : n) v = u(rng);
    const QExpPoly f = QExpPoly::monomial(m), h = QExpPoly::monomial(n);
    limit_ok = limit_ok && classical_limit_commutator(f, h, w) == poisson_bracket(specialize(f), specialize(h), w);
  }
  CheckReport lim = exact_report("classical-limit", limit_ok, "(1/2 pi i) d/dhbar [f, g] at 0", "{f, g}");
  lim.seed = o.seed;
  out.push_back(std::move(lim));
  return out;
}

inline CheckReport dilog_report(DilogCheck kind, std::complex<double> z, double hbar) {
  QDilogParams p;
  p.hbar = hbar;
  const DilogCheckResult r = dilog_check(kind, z, p);
  CheckReport rep = numeric_report(std::string("qdilog-") + to_string(kind), r.residual, r.tolerance);
  rep.lhs = "Phi(z) = " + json({r.value.real(), r.value.imag()}).dump();
  rep.note = "z=" + json(z.real()).dump() + (z.imag() != 0.0 ? " + " + json(z.imag()).dump() + "i" : "") +
             " hbar=" + json(hbar).dump();
  return rep;
}

inline std::vector<CheckReport> check_qdilog(const FatGraph&, const CheckOptions& o) {
  return {dilog_report(DilogCheck::Difference, o.z, o.hbar), dilog_report(DilogCheck::Quasi1, o.z, o.hbar)};
}

inline DilogCheck parse_dilog_check(const std::string& s) {
  if (s == "difference") return DilogCheck::Difference;
  if (s == "quasi1") return DilogCheck::Quasi1;
  if (s == "quasi2") return DilogCheck::Quasi2;
  return DilogCheck::Semiclassical;
}

inline int emit_reports(const std::vector<CheckReport>& reports, bool timing, std::ostream& out) {
  json arr = json::array();
  bool all = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r, timing));
    all = all && r.passed;
  }
  out << json{{"status", all ? "pass" : "fail"}, {"reports", arr}}.dump(2) << "\n";
  return all ? 0 : 1;
}

inline json graph_info(const FatGraph& g) {
  json faces = json::array();
  for (const Face& f : g.faces()) {
    const Perimeter p = face_perimeter(g, f);
    faces.push_back({{"darts", f.darts}, {"multiplicity", p.multiplicity}, {"perimeter", p.value}});
  }
  const OmegaMatrix w = omega_matrix(g);
  json omega = json::array();
  for (int i = 0; i < w.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < w.size(); ++j) row.push_back(w(i, j));
    omega.push_back(row);
  }
  return {{"topology", topology_to_json(g.topology())}, {"vertices", g.vertices()}, {"faces", faces}, {"omega", omega}};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shear coordinates, geodesic functions and flips on fat graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* graph = app.add_subcommand("graph", "Validate or describe a graph file");
  graph->require_subcommand(1);
  std::string graph_file;
  auto* validate_cmd = graph->add_subcommand("validate", "Check the graph invariants");
  validate_cmd->add_option("file", graph_file, "graph JSON")->required();
  validate_cmd->callback([&] {
    action = [&] {
      const FatGraph g = read_graph(graph_file);
      out << json{{"valid", true}, {"topology", topology_to_json(g.topology())}}.dump(2) << "\n";
      return 0;
    };
  });
  auto* info_cmd = graph->add_subcommand("info", "Topology, faces, perimeters and the edge form");
  info_cmd->add_option("file", graph_file, "graph JSON")->required();
  info_cmd->callback([&] {
    action = [&] {
      out << graph_info(read_graph(graph_file)).dump(2) << "\n";
      return 0;
    };
  });

  auto* geodesic = app.add_subcommand("geodesic", "Geodesic functions of closed paths");
  geodesic->require_subcommand(1);
  std::string path_text;
  auto* eval_cmd = geodesic->add_subcommand("eval", "Geodesic function of a dart path");
  eval_cmd->add_option("file", graph_file, "graph JSON")->required();
  eval_cmd->add_option("--path", path_text, "darts, e.g. 0,5")->required();
  eval_cmd->callback([&] {
    action = [&] {
      const FatGraph g = read_graph(graph_file);
      const PathWord p = parse_path(path_text);
      const ExpPoly f = geodesic_function(g, p);
      out << json{{"path", p},
                  {"word", word_string(g, p)},
                  {"graph_simple", graph_simple(p)},
                  {"geodesic_function", to_string(f)},
                  {"terms", to_json(f)},
                  {"value", eval(f, g.labels())}}
                 .dump(2)
          << "\n";
      return 0;
    };
  });

  int edge = -1;
  auto* flip_cmd = app.add_subcommand("flip", "Flip one edge");
  flip_cmd->add_option("file", graph_file, "graph JSON")->required();
  flip_cmd->add_option("--edge", edge, "edge index")->required();
  flip_cmd->callback([&] {
    action = [&] {
      const FlipRecord r = flip(read_graph(graph_file), edge);
      out << json{{"after", graph_to_json(r.after)}, {"record", to_json(r)}}.dump(2) << "\n";
      return 0;
    };
  });

  CheckOptions opts;
  std::string check_name;
  bool timing = false;
  auto* check = app.add_subcommand("check", "Run an identity check suite");
  check->add_option("name", check_name, "suite")
      ->required()
      ->check(CLI::IsMember({"skein", "goldman", "casimir", "relations", "qskein", "qdilog"}));
  check->add_option("--graph", opts.graph, "torus, tetrahedron or a graph file")->capture_default_str();
  check->add_option("--seed", opts.seed, "random seed")->capture_default_str();
  check->add_option("--cases", opts.cases, "random cases")->capture_default_str()->check(CLI::NonNegativeNumber);
  check->add_option("--z", opts.z, "qdilog argument")->capture_default_str();
  check->add_option("--hbar", opts.hbar, "qdilog Planck constant")->capture_default_str();
  check->add_flag("--timing", timing, "include elapsed_ms in reports");
  check->callback([&] {
    action = [&] {
      const FatGraph g = load_graph(opts.graph);
      using Suite = std::vector<CheckReport> (*)(const FatGraph&, const CheckOptions&);
      const std::map<std::string, Suite> suites = {
          {"skein", check_skein},     {"goldman", check_goldman}, {"casimir", check_casimir},
          {"relations", check_relations_suite}, {"qskein", check_qskein}, {"qdilog", check_qdilog}};
      const Stopwatch sw;
      std::vector<CheckReport> reports = suites.at(check_name)(g, opts);
      const double ms = sw.ms();
      for (auto& r : reports) r.elapsed_ms = ms / static_cast<double>(std::max<std::size_t>(1, reports.size()));
      return emit_reports(reports, timing, out);
    };
  });

  double qz = 0.0, qzi = 0.0, qhbar = 1.0;
  std::string qcheck = "difference";
  auto* qdilog = app.add_subcommand("qdilog", "Evaluate the quantum dilogarithm and check an identity");
  qdilog->add_option("--z", qz, "real part of the argument")->required();
  qdilog->add_option("--zi", qzi, "imaginary part of the argument")->capture_default_str();
  qdilog->add_option("--hbar", qhbar, "Planck constant")->required();
  qdilog->add_option("--check", qcheck, "identity")
      ->capture_default_str()
      ->check(CLI::IsMember({"difference", "quasi1", "quasi2", "semiclassical"}));
  qdilog->callback([&] {
    action = [&] {
      QDilogParams p;
      p.hbar = qhbar;
      const DilogCheck kind = parse_dilog_check(qcheck);
      const DilogCheckResult r = dilog_check(kind, {qz, qzi}, p);
      out << json{{"value", {{"re", r.value.real()}, {"im", r.value.imag()}}},
                  {"check", qcheck},
                  {"residual", r.residual},
                  {"tolerance", r.tolerance},
                  {"status", r.passed() ? "pass" : "fail"}}
                 .dump(2)
          << "\n";
      return r.passed() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace teich::cli
