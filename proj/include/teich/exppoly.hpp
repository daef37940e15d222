#pragma once

// Exponential Laurent polynomials sum_m c_m exp((m . z)/2) with exact
// coefficients, and their q-deformation with coefficients in Z[rho, 1/rho],
// rho = q^{1/4}, q = exp(-i pi hbar).
//
// Monomial rules, with k = m^T omega n:
//   {e^{m.z/2}, e^{n.z/2}} = (k/4) e^{(m+n).z/2}
//   e^{m.Z/2} o e^{n.Z/2}  = rho^{-k} e^{(m+n).Z/2}

#include "teich/fatgraph.hpp"
#include "teich/number.hpp"

#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace teich {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Laurent polynomial in rho with integer coefficients (canonical: no zeros).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer c) { add_term(0, std::move(c)); }  // NOLINT: scalars convert
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}        // NOLINT

  static LaurentPoly rho_power(int k, Integer c = 1) {
    LaurentPoly p;
    p.add_term(k, std::move(c));
    return p;
  }

  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  Integer coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int k, Integer c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Value at rho = 1.
  Integer at_one() const {
    Integer s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  /// rho -> 1/rho.
  LaurentPoly star() const {
    LaurentPoly p;
    for (const auto& [k, c] : terms_) p.add_term(-k, c);
    return p;
  }

  /// sum_k k c_k, the rho-derivative at rho = 1.
  Integer derivative_at_one() const {
    Integer s = 0;
    for (const auto& [k, c] : terms_) s += c * k;
    return s;
  }

  /// Exact division by an integer; throws if some coefficient is not divisible.
  LaurentPoly divided_by(const Integer& d) const {
    LaurentPoly p;
    for (const auto& [k, c] : terms_) {
      if (c % d != 0) throw std::domain_error("inexact Laurent division");
      p.add_term(k, c / d);
    }
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) p.add_term(i + j, x * y);
    return p;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Integer> terms_;
};

using QCoeff = LaurentPoly;

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (k != 0) s += "*r^" + std::to_string(k);
  }
  return p.terms().size() > 1 ? "(" + s + ")" : s;
}

/// Finite map from exponent vectors to nonzero coefficients, keys ordered
/// lexicographically.
template <class Coeff>
class BasicExpPoly {
 public:
  using coeff_type = Coeff;

  explicit BasicExpPoly(int dim = 0) : dim_(dim) {}

  static BasicExpPoly constant(int dim, Coeff c) {
    BasicExpPoly p(dim);
    p.add_term(ExpVector(dim, 0), std::move(c));
    return p;
  }
  static BasicExpPoly monomial(ExpVector m, Coeff c = Coeff(1)) {
    BasicExpPoly p(static_cast<int>(m.size()));
    p.add_term(std::move(m), std::move(c));
    return p;
  }
  /// exp(sign * z_edge / 2).
  static BasicExpPoly exp_half(int dim, int edge, int sign) {
    ExpVector m(dim, 0);
    m[edge] = sign;
    return monomial(std::move(m));
  }

  int dim() const { return dim_; }
  const std::map<ExpVector, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const ExpVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(ExpVector m, Coeff c) {
    if (static_cast<int>(m.size()) != dim_) throw DimensionError("exponent vector has wrong length");
    if (c == Coeff()) return;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff()) terms_.erase(it);
    }
  }

  BasicExpPoly& operator+=(const BasicExpPoly& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicExpPoly& operator-=(const BasicExpPoly& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend BasicExpPoly operator+(BasicExpPoly a, const BasicExpPoly& b) { return a += b; }
  friend BasicExpPoly operator-(BasicExpPoly a, const BasicExpPoly& b) { return a -= b; }
  friend BasicExpPoly operator-(const BasicExpPoly& a) { return BasicExpPoly(a.dim_) - a; }

  /// Scalar multiple.
  friend BasicExpPoly operator*(const Coeff& s, const BasicExpPoly& a) {
    BasicExpPoly p(a.dim_);
    for (const auto& [m, c] : a.terms_) p.add_term(m, s * c);
    return p;
  }

  /// Commutative product.
  friend BasicExpPoly operator*(const BasicExpPoly& a, const BasicExpPoly& b) {
    a.check_dim(b);
    BasicExpPoly p(a.dim_);
    for (const auto& [m, x] : a.terms_)
      for (const auto& [n, y] : b.terms_) p.add_term(add(m, n), x * y);
    return p;
  }

  friend bool operator==(const BasicExpPoly&, const BasicExpPoly&) = default;

  void check_dim(const BasicExpPoly& o) const {
    if (o.dim_ != dim_) throw DimensionError("exponential polynomials over different edge sets");
  }

  static ExpVector add(const ExpVector& m, const ExpVector& n) {
    ExpVector r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] + n[i];
    return r;
  }

 private:
  int dim_;
  std::map<ExpVector, Coeff> terms_;
};

using ExpPoly = BasicExpPoly<Rational>;
using QExpPoly = BasicExpPoly<QCoeff>;

/// Substitutes real labels.
inline double eval(const ExpPoly& f, std::span<const double> z) {
  if (static_cast<int>(z.size()) != f.dim()) throw DimensionError("label vector has wrong length");
  double s = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double arg = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) arg += m[i] * z[i];
    s += to_double(c) * std::exp(0.5 * arg);
  }
  return s;
}

inline void check_omega(int dim, const OmegaMatrix& w) {
  if (w.size() != dim) throw DimensionError("omega size does not match the edge count");
}

inline ExpPoly poisson_bracket(const ExpPoly& f, const ExpPoly& g, const OmegaMatrix& w) {
  f.check_dim(g);
  check_omega(f.dim(), w);
  ExpPoly out(f.dim());
  for (const auto& [m, x] : f.terms())
    for (const auto& [n, y] : g.terms()) {
      const long long k = w.pair(m, n);
      if (k != 0) out.add_term(ExpPoly::add(m, n), Rational(k, 4) * x * y);
    }
  return out;
}

/// Noncommutative product of the quantum torus algebra.
inline QExpPoly qmul(const QExpPoly& f, const QExpPoly& g, const OmegaMatrix& w) {
  f.check_dim(g);
  check_omega(f.dim(), w);
  QExpPoly out(f.dim());
  for (const auto& [m, x] : f.terms())
    for (const auto& [n, y] : g.terms()) {
      const long long k = w.pair(m, n);
      out.add_term(QExpPoly::add(m, n), LaurentPoly::rho_power(static_cast<int>(-k)) * x * y);
    }
  return out;
}

inline QExpPoly star(const QExpPoly& f) {
  QExpPoly out(f.dim());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.star());
  return out;
}

inline bool is_star_fixed(const QExpPoly& f) { return star(f) == f; }

inline bool is_rho_free(const QExpPoly& f) {
  for (const auto& [m, c] : f.terms())
    if (!c.is_constant()) return false;
  return true;
}

/// rho = 1.
inline ExpPoly specialize(const QExpPoly& f) {
  ExpPoly out(f.dim());
  for (const auto& [m, c] : f.terms()) out.add_term(m, Rational(c.at_one()));
  return out;
}

/// Each monomial c e^{m.z/2} becomes c e^{m.Z/2}; a single exponential of a
/// linear combination needs no further ordering. Coefficients must be integers.
inline QExpPoly quantize(const ExpPoly& f) {
  QExpPoly out(f.dim());
  for (const auto& [m, c] : f.terms()) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("quantize: coefficient " + to_string(c) + " is not an integer");
    out.add_term(m, LaurentPoly(boost::multiprecision::numerator(c)));
  }
  return out;
}

/// (1/(2 pi i)) d/dhbar [f o g - g o f] at hbar = 0, exactly. With
/// rho = exp(-i pi hbar / 4), d(rho^k)/dhbar at 0 is -i pi k / 4, so each
/// coefficient sum_k c_k rho^k contributes -(1/8) sum_k k c_k.
inline ExpPoly classical_limit_commutator(const QExpPoly& f, const QExpPoly& g, const OmegaMatrix& w) {
  if (!is_rho_free(f) || !is_rho_free(g))
    throw std::domain_error("classical limit needs rho-independent coefficients");
  const QExpPoly comm = qmul(f, g, w) - qmul(g, f, w);
  ExpPoly out(f.dim());
  for (const auto& [m, c] : comm.terms()) out.add_term(m, Rational(-c.derivative_at_one(), 8));
  return out;
}

namespace detail {
inline std::string render_exponent(const ExpVector& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(m[i]) + "*z" + std::to_string(i);
  }
  return s;
}
}  // namespace detail

/// "c * exp((m0*z0 + m1*z1 + ...)/2)" joined by " + "; the zero polynomial is "0".
template <class Coeff>
std::string to_string(const BasicExpPoly<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    const std::string e = detail::render_exponent(m);
    s += to_string(c);
    if (!e.empty()) s += " * exp((" + e + ")/2)";
  }
  return s;
}

}  // namespace teich
