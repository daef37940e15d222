#pragma once

// Closed paths on a fat graph compiled into 2x2 matrix words over ExpPoly.
//
// For darts d_1..d_n the word is T_n X_{z(d_n)} ... T_1 X_{z(d_1)}, where
// T_k = L if d_{k+1} = sigma(opp d_k) and T_k = R if d_{k+1} = sigma^2(opp d_k).

#include "teich/exppoly.hpp"
#include "teich/fatgraph.hpp"
#include "teich/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace teich {

using PathWord = std::vector<int>;

class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Turn { L, R };

inline const char* to_string(Turn t) { return t == Turn::L ? "L" : "R"; }

inline std::vector<Turn> turn_sequence(const FatGraph& g, const PathWord& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) throw PathError("empty path");
  for (int d : p)
    if (d < 0 || d >= g.dart_count()) throw PathError("dart " + std::to_string(d) + " out of range");
  std::vector<Turn> turns;
  turns.reserve(n);
  for (int k = 0; k < n; ++k) {
    const int o = FatGraph::opposite(p[k]);
    const int nx = p[(k + 1) % n];
    if (nx == g.next(o)) turns.push_back(Turn::L);
    else if (nx == g.next(g.next(o))) turns.push_back(Turn::R);
    else if (nx == o)
      throw PathError("path backtracks at step " + std::to_string(k) + " (dart " + std::to_string(p[k]) + ")");
    else
      throw PathError("darts " + std::to_string(p[k]) + " and " + std::to_string(nx) +
                      " do not meet at a vertex");
  }
  return turns;
}

inline void validate_path(const FatGraph& g, const PathWord& p) { (void)turn_sequence(g, p); }

template <class T>
struct Mat2 {
  T a, b, c, d;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  /// Inverse of a determinant-one matrix.
  Mat2 sl2_inverse() const { return {d, -b, -c, a}; }
};

using MatrixEP = Mat2<ExpPoly>;

inline MatrixEP constant_matrix(int dim, int a, int b, int c, int d) {
  return {ExpPoly::constant(dim, a), ExpPoly::constant(dim, b), ExpPoly::constant(dim, c),
          ExpPoly::constant(dim, d)};
}

inline MatrixEP l_matrix(int dim) { return constant_matrix(dim, 0, 1, -1, -1); }
inline MatrixEP r_matrix(int dim) { return constant_matrix(dim, 1, 1, -1, 0); }
inline MatrixEP identity_matrix(int dim) { return constant_matrix(dim, 1, 0, 0, 1); }

/// X_z for the label of one edge.
inline MatrixEP x_matrix(int dim, int edge) {
  return {ExpPoly(dim), -ExpPoly::exp_half(dim, edge, 1), ExpPoly::exp_half(dim, edge, -1), ExpPoly(dim)};
}

namespace detail {
/// True when the coefficient at the largest exponent is negative.
inline bool leading_negative(const ExpPoly& f) {
  return !f.is_zero() && f.terms().rbegin()->second < 0;
}
}  // namespace detail

/// The matrix word of a closed path, with the global sign fixed so the trace
/// has a positive leading coefficient.
inline MatrixEP path_matrix(const FatGraph& g, const PathWord& p) {
  const std::vector<Turn> turns = turn_sequence(g, p);
  const int dim = g.edge_count();
  const MatrixEP lm = l_matrix(dim), rm = r_matrix(dim);
  MatrixEP m = identity_matrix(dim);
  for (std::size_t k = 0; k < p.size(); ++k)
    m = (turns[k] == Turn::L ? lm : rm) * x_matrix(dim, FatGraph::edge_of(p[k])) * m;
  if (detail::leading_negative(m.trace())) m = -m;
  return m;
}

/// The word as text, e.g. "R X_{z1} L X_{z0}".
inline std::string word_string(const FatGraph& g, const PathWord& p) {
  const std::vector<Turn> turns = turn_sequence(g, p);
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (!s.empty()) s += " ";
    s += std::string(to_string(turns[k])) + " X_{z" + std::to_string(FatGraph::edge_of(p[k])) + "}";
  }
  return s;
}

inline ExpPoly geodesic_function(const FatGraph& g, const PathWord& p) { return path_matrix(g, p).trace(); }

inline bool graph_simple(const PathWord& p) {
  std::vector<int> edges;
  for (int d : p) edges.push_back(FatGraph::edge_of(d));
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

/// Entries a, d with nonnegative and b, c with nonpositive coefficients.
inline bool has_sign_structure(const MatrixEP& m) {
  auto all = [](const ExpPoly& f, int sign) {
    for (const auto& [e, c] : f.terms())
      if (c * sign < 0) return false;
    return true;
  };
  return all(m.a, 1) && all(m.d, 1) && all(m.b, -1) && all(m.c, -1);
}

struct ProductTraces {
  ExpPoly pq;      // Tr(PQ)
  ExpPoly pq_inv;  // Tr(PQ^{-1})
};

/// Both paths must start at the same dart, so their words share a frame.
inline ProductTraces product_traces(const FatGraph& g, const PathWord& p, const PathWord& q) {
  const MatrixEP mp = path_matrix(g, p), mq = path_matrix(g, q);
  if (p.front() != q.front()) throw PathError("product paths must share their first dart");
  return {(mp * mq).trace(), (mp * mq.sl2_inverse()).trace()};
}

inline CheckReport skein_check(const FatGraph& g, const PathWord& p, const PathWord& q) {
  const ProductTraces t = product_traces(g, p, q);
  const ExpPoly lhs = geodesic_function(g, p) * geodesic_function(g, q);
  const ExpPoly rhs = t.pq + t.pq_inv;
  return exact_report("skein", lhs == rhs, to_string(lhs), to_string(rhs));
}

/// {G_P, G_Q} = 1/2 G_PQ - 1/2 G_PQ^{-1}, for paths crossing once.
inline CheckReport goldman_check(const FatGraph& g, const PathWord& p, const PathWord& q, const OmegaMatrix& w) {
  const ExpPoly lhs = poisson_bracket(geodesic_function(g, p), geodesic_function(g, q), w);
  const ProductTraces t = product_traces(g, p, q);
  const Rational half(1, 2);
  const ExpPoly rhs = half * t.pq - half * t.pq_inv;
  return exact_report("goldman", lhs == rhs, to_string(lhs), to_string(rhs));
}

namespace torus_paths {
inline const PathWord A{0, 5};
inline const PathWord B{0, 3};
inline const PathWord AB_inv{2, 5};
inline const PathWord hole{0, 3, 4, 1, 2, 5};
}  // namespace torus_paths

inline bool is_standard_torus(const FatGraph& g) { return g.sigma() == once_punctured_torus().sigma(); }

/// {G_A, G_B} = 1/2 G_A G_B - G_{AB^{-1}} on the torus.
inline CheckReport torus_algebra_check(const FatGraph& g) {
  if (!is_standard_torus(g)) throw std::invalid_argument("torus algebra check needs the standard torus graph");
  const OmegaMatrix w = omega_matrix(g);
  const ExpPoly ga = geodesic_function(g, torus_paths::A), gb = geodesic_function(g, torus_paths::B);
  const ExpPoly gx = geodesic_function(g, torus_paths::AB_inv);
  const ExpPoly lhs = poisson_bracket(ga, gb, w);
  const ExpPoly rhs = Rational(1, 2) * (ga * gb) - gx;
  return exact_report("goldman-torus-algebra", lhs == rhs, to_string(lhs), to_string(rhs));
}

/// C = G_A^2 + G_B^2 + G_X^2 - G_A G_B G_X with X = AB^{-1}.
inline ExpPoly torus_casimir(const FatGraph& g) {
  if (!is_standard_torus(g)) throw std::invalid_argument("torus Casimir needs the standard torus graph");
  const ExpPoly ga = geodesic_function(g, torus_paths::A), gb = geodesic_function(g, torus_paths::B);
  const ExpPoly gx = geodesic_function(g, torus_paths::AB_inv);
  return ga * ga + gb * gb + gx * gx - ga * gb * gx;
}

/// Random closed path starting at dart `start` with at most `max_len` darts.
template <class Rng>
PathWord random_closed_path(const FatGraph& g, int start, Rng& rng, int max_len = 12) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    PathWord p{start};
    while (static_cast<int>(p.size()) <= max_len) {
      const int o = FatGraph::opposite(p.back());
      const int l = g.next(o), r = g.next(l);
      if ((l == start || r == start) && rng() % 3 == 0) return p;
      if (static_cast<int>(p.size()) == max_len) break;
      p.push_back(rng() % 2 == 0 ? l : r);
    }
  }
  throw std::runtime_error("could not close a random path");
}

// Tensor identities for the r-matrix, numerically.

using Mat4 = std::array<std::array<double, 4>, 4>;

inline Mat4 kron(const Mat2<double>& x, const Mat2<double>& y) {
  const double xs[2][2] = {{x.a, x.b}, {x.c, x.d}};
  const double ys[2][2] = {{y.a, y.b}, {y.c, y.d}};
  Mat4 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = xs[i][j] * ys[k][l];
  return m;
}

inline Mat2<double> x_numeric(double z) { return {0.0, -std::exp(z / 2), std::exp(-z / 2), 0.0}; }

/// Max deviation between the bracket tensor {X_{z1} (x) X_{z4}} for the given
/// value of {z1, z4} and coeff * (X_{z1} (x) X_{z4}) S, with S = diag(1,-1,-1,1).
inline double local_tensor_residual(double z1, double z4, double bracket, double coeff) {
  // Entries are +-exp(+-z/2), so d/dz of entry (i,j) is -(s_j/2) times it.
  const Mat2<double> x1 = x_numeric(z1), x4 = x_numeric(z4);
  const Mat4 xx = kron(x1, x4);
  const double s[2] = {1.0, -1.0};
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const double e1 = (i == 0 ? (j == 0 ? x1.a : x1.b) : (j == 0 ? x1.c : x1.d));
          const double e4 = (k == 0 ? (l == 0 ? x4.a : x4.b) : (l == 0 ? x4.c : x4.d));
          const double d1 = -0.5 * s[j] * e1, d4 = -0.5 * s[l] * e4;
          const double lhs = bracket * d1 * d4;
          const double rhs = coeff * xx[2 * i + k][2 * j + l] * s[j] * s[l];
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

/// |Tr_12[(A (x) B)(P - 1/2)] - (Tr AB - 1/2 Tr A Tr B)| with P the permutation tensor.
inline double global_rmatrix_residual(const Mat2<double>& a, const Mat2<double>& b) {
  const Mat4 ab = kron(a, b);
  double lhs = 0.0;
  for (int r = 0; r < 4; ++r) lhs -= 0.5 * ab[r][r];
  // P[(j,l),(m,n)] = [j==n][l==m], so (A(x)B)P has diagonal entry (A(x)B)[(i,k),(k,i)].
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) lhs += ab[2 * i + k][2 * k + i];
  const double rhs = (a * b).trace() - 0.5 * a.trace() * b.trace();
  return std::abs(lhs - rhs);
}

template <class Rng>
Mat2<double> random_sl2(Rng& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double a = 0.0;
  while (std::abs(a) < 0.3) a = u(rng);
  const double b = u(rng), c = u(rng);
  return {a, b, c, (1.0 + b * c) / a};
}

}  // namespace teich
