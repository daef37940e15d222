#pragma once

// Flips (Whitehead moves) on trivalent fat graphs.
//
// Flipping edge e with darts a = 2e, b = 2e + 1 re-glues the quadrilateral
// around e. With a1 = sigma(a), a2 = sigma^2(a), b1 = sigma(b), b2 = sigma^2(b)
// the new vertices are (a, b2, a1) and (b, a2, b1). Labels change as
//   z_e -> -z_e,  edges of a1, b1 get +phi(z_e),  edges of a2, b2 get -phi(-z_e)
// with phi(x) = log(1 + e^x); repeated corner edges collect both terms.

#include "teich/fatgraph.hpp"
#include "teich/geodesics.hpp"
#include "teich/report.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace teich {

class FlipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline double phi(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

struct FlipRecord {
  int edge = -1;
  std::array<int, 4> corner_darts{};  // a1, a2, b1, b2
  std::array<int, 4> corners{};       // their edges, in cyclic order around the quadrilateral
  FatGraph before;
  FatGraph after;
};

inline FlipRecord flip(const FatGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw FlipError("edge " + std::to_string(e) + " out of range");
  const int a = 2 * e, b = a + 1;
  if (g.vertex_of(a) == g.vertex_of(b))
    throw FlipError("edge " + std::to_string(e) + " is a loop at one vertex and cannot be flipped");
  const int a1 = g.next(a), a2 = g.next(a1), b1 = g.next(b), b2 = g.next(b1);

  std::vector<int> s = g.sigma();
  s[a] = b2;
  s[b2] = a1;
  s[a1] = a;
  s[b] = a2;
  s[a2] = b1;
  s[b1] = b;

  std::vector<double> z = g.labels();
  const double x = z[e];
  z[e] = -x + 0.0;  // no negative zero
  const double plus = phi(x), minus = phi(-x);
  z[FatGraph::edge_of(a1)] += plus;
  z[FatGraph::edge_of(b1)] += plus;
  z[FatGraph::edge_of(a2)] -= minus;
  z[FatGraph::edge_of(b2)] -= minus;

  return {e,
          {a1, a2, b1, b2},
          {FatGraph::edge_of(a1), FatGraph::edge_of(a2), FatGraph::edge_of(b1), FatGraph::edge_of(b2)},
          g,
          FatGraph(std::move(s), std::move(z))};
}

/// Rewrites a closed path on the before-graph as the same closed curve on the
/// after-graph: the flipped edge is dropped where the curve crossed it and
/// inserted where the curve now crosses it.
inline PathWord transport_path(const FlipRecord& r, const PathWord& p) {
  validate_path(r.before, p);
  const int a = 2 * r.edge, b = a + 1;
  const auto [a1, a2, b1, b2] = r.corner_darts;
  // 0: not in the quadrilateral; 1: new vertex of a; 2: new vertex of b.
  auto side = [&](int d) { return (d == a1 || d == b2) ? 1 : (d == a2 || d == b1) ? 2 : 0; };
  const int n = static_cast<int>(p.size());
  PathWord out;
  for (int k = 0; k < n; ++k) {
    const int d = p[k];
    if (d == a || d == b) continue;
    out.push_back(d);
    const int x = FatGraph::opposite(d);
    const int sx = side(x);
    if (sx == 0) continue;
    int y = p[(k + 1) % n];
    if (y == a || y == b) y = p[(k + 2) % n];
    if (side(y) != sx) out.push_back(sx == 1 ? a : b);
  }
  validate_path(r.after, out);
  return out;
}

/// Dart map f from g to h with edge(f(d)) = edge_map[edge(d)], f(opp d) =
/// opp f(d) and f(sigma d) = sigma' f(d), if one exists.
inline std::optional<std::vector<int>> find_isomorphism(const FatGraph& g, const FatGraph& h,
                                                        const std::vector<int>& edge_map) {
  const int n = g.dart_count();
  if (h.dart_count() != n || static_cast<int>(edge_map.size()) != g.edge_count()) return std::nullopt;
  for (int f0 : {2 * edge_map[0], 2 * edge_map[0] + 1}) {
    std::vector<int> f(n, -1);
    f[0] = f0;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      for (auto [x, y] : {std::pair{FatGraph::opposite(d), FatGraph::opposite(f[d])}, std::pair{g.next(d), h.next(f[d])}}) {
        if (edge_map[FatGraph::edge_of(x)] != FatGraph::edge_of(y)) {
          ok = false;
          break;
        }
        if (f[x] < 0) {
          f[x] = y;
          stack.push_back(x);
        } else if (f[x] != y) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return f;
  }
  return std::nullopt;
}

/// Max |z_g(i) - z_h(edge_map[i])| if the graphs are isomorphic along edge_map.
inline std::optional<double> labeled_distance(const FatGraph& g, const FatGraph& h, const std::vector<int>& edge_map) {
  if (!find_isomorphism(g, h, edge_map)) return std::nullopt;
  double worst = 0.0;
  for (int i = 0; i < g.edge_count(); ++i) worst = std::max(worst, std::abs(g.label(i) - h.label(edge_map[i])));
  return worst;
}

inline std::vector<int> identity_edge_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

/// Vertices (by smallest dart) at the two ends of an edge.
inline std::array<int, 2> endpoints(const FatGraph& g, int e) { return {g.vertex_of(2 * e), g.vertex_of(2 * e + 1)}; }

inline int shared_vertices(const FatGraph& g, int e1, int e2) {
  const auto u = endpoints(g, e1), v = endpoints(g, e2);
  int count = 0;
  for (int x : {u[0], u[1]})
    if (x == v[0] || x == v[1]) ++count;
  if (u[0] == u[1]) count = std::min(count, 1);
  return count;
}

/// No loops and no two edges joining the same pair of vertices.
inline bool is_simple_graph(const FatGraph& g) {
  std::vector<std::array<int, 2>> seen;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto ends = endpoints(g, e);
    if (ends[0] == ends[1]) return false;
    if (ends[0] > ends[1]) std::swap(ends[0], ends[1]);
    if (std::find(seen.begin(), seen.end(), ends) != seen.end()) return false;
    seen.push_back(ends);
  }
  return true;
}

enum class RelationMode { Involution, Commute, Pentagon };

inline const char* to_string(RelationMode m) {
  switch (m) {
    case RelationMode::Involution: return "involution";
    case RelationMode::Commute: return "commute";
    default: return "pentagon";
  }
}

/// Checks one relation of the flip groupoid on g. Precondition violations throw FlipError.
inline CheckReport check_relations(RelationMode mode, const FatGraph& g, const std::vector<int>& edges,
                                   double tol = 1e-12) {
  const int e1 = edges.at(0);
  const std::string name = std::string("relation-") + to_string(mode);
  std::optional<double> dist;
  switch (mode) {
    case RelationMode::Involution: {
      const FatGraph twice = flip(flip(g, e1).after, e1).after;
      dist = labeled_distance(g, twice, identity_edge_map(g.edge_count()));
      break;
    }
    case RelationMode::Commute: {
      const int e2 = edges.at(1);
      if (e1 == e2 || shared_vertices(g, e1, e2) != 0)
        throw FlipError("commutation needs two edges without a common vertex");
      const FatGraph x = flip(flip(g, e1).after, e2).after;
      const FatGraph y = flip(flip(g, e2).after, e1).after;
      dist = labeled_distance(x, y, identity_edge_map(g.edge_count()));
      break;
    }
    case RelationMode::Pentagon: {
      const int e2 = edges.at(1);
      if (!is_simple_graph(g)) throw FlipError("pentagon needs a graph whose edges meet at most once");
      if (e1 == e2 || shared_vertices(g, e1, e2) != 1)
        throw FlipError("pentagon needs two edges with exactly one common vertex");
      FatGraph h = g;
      for (int e : {e1, e2, e1, e2, e1}) h = flip(h, e).after;
      std::vector<int> m = identity_edge_map(g.edge_count());
      std::swap(m[e1], m[e2]);
      dist = labeled_distance(g, h, m);
      break;
    }
  }
  if (!dist) {
    CheckReport r = exact_report(name, false, "graph", "not isomorphic");
    return r;
  }
  CheckReport r = numeric_report(name, *dist, tol);
  r.lhs = "labels after sequence";
  r.rhs = "original labels";
  return r;
}

/// Sorted face perimeters.
inline std::vector<double> perimeters(const FatGraph& g) {
  std::vector<double> out;
  for (const Face& f : g.faces()) out.push_back(face_perimeter(g, f).value);
  std::sort(out.begin(), out.end());
  return out;
}

/// The coordinate change of the torus flip of z0, read back on the standard
/// torus through the identification exchanging edges 1 and 2.
inline std::array<double, 3> torus_flip_map(const std::array<double, 3>& z) {
  const FatGraph g = once_punctured_torus({z[0], z[1], z[2]});
  const FatGraph h = flip(g, 0).after;
  if (!find_isomorphism(g, h, {0, 2, 1})) throw std::logic_error("torus flip lost its standard form");
  return {h.label(0), h.label(2), h.label(1)};
}

/// The torus map in the form printed with the opposite orientation:
/// z0 -> -z0, z1 -> z2 + 2 phi(z0), z2 -> z1 - 2 phi(-z0).
inline std::array<double, 3> mirrored_torus_map(const std::array<double, 3>& z) {
  return {-z[0], z[2] + 2.0 * phi(z[0]), z[1] - 2.0 * phi(-z[0])};
}

/// U -> 1/U and V -> e^{l/2} V^{-1} / (U + U^{-1}) with U = e^{z0/2},
/// l = z0 + z1 + z2 and V = e^{z1/2} for the flip map (V = e^{z2/2} for the
/// mirrored form). Also checks that the two forms are conjugate by z1 <-> z2.
inline CheckReport torus_modular_check(const std::array<double, 3>& z, double tol = 1e-12) {
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
  const double u = std::exp(z[0] / 2), l = z[0] + z[1] + z[2];
  double worst = 0.0;

  const auto m = torus_flip_map(z);
  const double v = std::exp(z[1] / 2);
  worst = std::max(worst, rel(std::exp(m[0] / 2), 1.0 / u));
  worst = std::max(worst, rel(std::exp(m[1] / 2), std::exp(l / 2) / v / (u + 1.0 / u)));

  const auto p = mirrored_torus_map(z);
  const double vm = std::exp(z[2] / 2);
  worst = std::max(worst, rel(std::exp(p[0] / 2), 1.0 / u));
  worst = std::max(worst, rel(std::exp(p[2] / 2), std::exp(l / 2) / vm / (u + 1.0 / u)));

  const auto conj = torus_flip_map({z[0], z[2], z[1]});
  worst = std::max({worst, rel(conj[0], p[0]), rel(conj[2], p[1]), rel(conj[1], p[2])});

  CheckReport r = numeric_report("torus-modular", worst, tol, "flip-induced U', V'", "1/U, e^{l/2}/(V(U+1/U))");
  return r;
}

}  // namespace teich
