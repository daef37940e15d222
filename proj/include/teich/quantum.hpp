#pragma once

// Quantum geodesic operators on the quantum torus algebra of a fat graph, and
// a numerical quantum dilogarithm.

#include "teich/exppoly.hpp"
#include "teich/geodesics.hpp"
#include "teich/report.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace teich {

class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct QGeodesic {
  PathWord path;
  QExpPoly op;
};

/// Weyl-ordered operator of a graph-simple path.
inline QGeodesic quantum_geodesic(const FatGraph& g, const PathWord& p) {
  if (!graph_simple(p)) throw UnsupportedError("quantum ordering is only built for graph-simple paths");
  return {p, quantize(geodesic_function(g, p))};
}

inline LaurentPoly rho(int k) { return LaurentPoly::rho_power(k); }

struct QSkeinResult {
  QExpPoly g_ab;                 // extracted quantum G_AB
  LaurentPoly ab_inv_coeff;      // coefficient of the AB^{-1} operator in A o B
  bool star_fixed = false;       // G_AB is Hermitian
  bool classical_match = false;  // rho = 1 gives Tr(PQ)
  bool reverse_match = false;    // B o A = q^{1/2} G_AB + q^{-1/2} G_{AB^{-1}}
  bool ab_inv_match = false;     // the supplied AB^{-1} operator specializes to Tr(PQ^{-1})
  std::string corrections;       // coefficients of G_AB that depend on rho
  bool passed() const { return star_fixed && classical_match && reverse_match && ab_inv_match; }
};

/// Splits A o B = q^{-1/2} G_AB + q^{1/2} G_{AB^{-1}} with q^{1/2} = rho^2.
inline QSkeinResult qskein_decompose(const FatGraph& g, const QGeodesic& a, const QGeodesic& b,
                                     const QGeodesic& ab_inv) {
  const OmegaMatrix w = omega_matrix(g);
  const ProductTraces classical = product_traces(g, a.path, b.path);
  QSkeinResult r;
  r.ab_inv_coeff = rho(2);
  r.ab_inv_match = specialize(ab_inv.op) == classical.pq_inv;
  const QExpPoly ab = qmul(a.op, b.op, w);
  r.g_ab = rho(2) * (ab - rho(2) * ab_inv.op);
  r.star_fixed = is_star_fixed(r.g_ab);
  r.classical_match = specialize(r.g_ab) == classical.pq;
  r.reverse_match = qmul(b.op, a.op, w) == rho(2) * r.g_ab + rho(-2) * ab_inv.op;
  for (const auto& [m, c] : r.g_ab.terms()) {
    if (c.is_constant()) continue;
    if (!r.corrections.empty()) r.corrections += "; ";
    r.corrections += "exp((" + detail::render_exponent(m) + ")/2): " + to_string(c);
  }
  return r;
}

struct QCommutatorResult {
  std::optional<LaurentPoly> factor;  // c with q-commutator = c * X, if proportional
  bool classical_limit_ok = false;
  bool matches_q = false;       // c = q - q^{-1}
  bool matches_sqrt_q = false;  // c = q^{1/2} - q^{-1/2}
  bool passed() const { return factor.has_value() && classical_limit_ok; }
};

/// [A, B]_q = q^{1/2} A o B - q^{-1/2} B o A tested for proportionality to x.
inline QCommutatorResult qcommutator_check(const FatGraph& g, const QGeodesic& a, const QGeodesic& b,
                                           const QExpPoly& x) {
  const OmegaMatrix w = omega_matrix(g);
  const QExpPoly qc = rho(2) * qmul(a.op, b.op, w) - rho(-2) * qmul(b.op, a.op, w);
  QCommutatorResult r;
  if (!x.is_zero()) {
    const auto& [m0, c0] = *x.terms().begin();
    if (c0.is_constant()) {
      try {
        const LaurentPoly c = qc.coefficient(m0).divided_by(c0.coefficient(0));
        if (qc == c * x) r.factor = c;
      } catch (const std::domain_error&) {
      }
    }
  }
  if (r.factor) {
    r.matches_q = *r.factor == rho(4) - rho(-4);
    r.matches_sqrt_q = *r.factor == rho(2) - rho(-2);
  }
  r.classical_limit_ok = classical_limit_commutator(a.op, b.op, w) ==
                         poisson_bracket(specialize(a.op), specialize(b.op), w);
  return r;
}

struct EmptyLoopResult {
  std::optional<LaurentPoly> scalar;  // A o A minus the candidate for G_{A^2}
  QExpPoly candidate;
  bool candidate_classical = false;  // candidate at rho = 1 is Tr(P^2)
  bool candidate_star_fixed = false;
  std::string relation;
};

/// The candidate for G_{A^2} keeps the non-constant part of A o A (star-fixed,
/// specializing to the non-constant part of Tr(P^2)) and takes its constant
/// term from the classical Tr(P^2).
inline EmptyLoopResult empty_loop_constant(const FatGraph& g, const QGeodesic& a) {
  const OmegaMatrix w = omega_matrix(g);
  const QExpPoly aa = qmul(a.op, a.op, w);
  const ExpPoly tr_p2 = product_traces(g, a.path, a.path).pq;
  const ExpVector zero(g.edge_count(), 0);

  EmptyLoopResult r;
  r.candidate = QExpPoly(g.edge_count());
  for (const auto& [m, c] : aa.terms())
    if (m != zero) r.candidate.add_term(m, c);
  const Rational c0 = tr_p2.coefficient(zero);
  if (boost::multiprecision::denominator(c0) != 1) throw std::logic_error("non-integer constant in Tr(P^2)");
  r.candidate.add_term(zero, LaurentPoly(boost::multiprecision::numerator(c0)));
  r.candidate_classical = specialize(r.candidate) == tr_p2;
  r.candidate_star_fixed = is_star_fixed(r.candidate);

  const QExpPoly rem = aa - r.candidate;
  bool scalar = true;
  for (const auto& [m, c] : rem.terms())
    if (m != zero) scalar = false;
  if (scalar) {
    r.scalar = rem.coefficient(zero);
    const LaurentPoly quoted = -(rho(4) + rho(-4));
    r.relation = "remainder " + to_string(*r.scalar) + " at rho=1 is " + r.scalar->at_one().str() +
                 "; -q-q^{-1} at rho=1 is " + quoted.at_one().str() +
                 (*r.scalar == -quoted ? "; remainder equals q+q^{-1}" : "") +
                 (*r.scalar == quoted ? "; remainder equals -q-q^{-1}" : "");
  }
  return r;
}

// Quantum dilogarithm
//
//   Phi(z) = -(pi hbar / 2) int e^{-ipz} dp / (sinh(pi p) sinh(pi hbar p))
//
// along the real line passing above p = 0. The odd part of the integrand only
// contributes its half residue, z/2; the even part is a finite-part integral:
//
//   Phi(z) = z/2 - pi hbar int_0^inf [cos(pz) / (sinh(pi p) sinh(pi hbar p)) - c/p^2] dp,
//
// c = 1/(pi^2 hbar). The tail of c/p^2 past P_max is added in closed form.

class DilogError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct QDilogParams {
  double hbar = 1.0;
  double pmax = 0.0;   // <= 0 selects it from the decay rate
  double r = -1.0;     // below r the integrand is evaluated by its Taylor series; < 0 selects 1e-3/(1+hbar)
  int nodes = 4096;    // quadrature nodes, 16 per panel
};

namespace detail {

inline constexpr double kPi = boost::math::constants::pi<double>();

/// Taylor coefficients of x/sinh(x) in powers of x^2.
inline constexpr double kXOverSinh[] = {1.0, -1.0 / 6, 7.0 / 360, -31.0 / 15120, 127.0 / 604800};

/// [cos(pz) pi p hbar pi p / (sinh(pi p) sinh(pi hbar p)) - 1] / p^2 as a series in t = p^2.
inline std::complex<double> small_p_bracket(double t, std::complex<double> z, double hbar) {
  constexpr int K = 5;
  std::complex<double> cosc[K];
  std::complex<double> f = 1.0, z2 = z * z;
  double fact = 1.0;
  for (int k = 0; k < K; ++k) {
    cosc[k] = (k % 2 == 0 ? 1.0 : -1.0) * f / fact;
    f *= z2;
    fact *= (2.0 * k + 1) * (2.0 * k + 2);
  }
  const double a1 = kPi * kPi, a2 = kPi * kPi * hbar * hbar;
  double s1[K], s2[K];
  double p1 = 1.0, p2 = 1.0;
  for (int k = 0; k < K; ++k) {
    s1[k] = kXOverSinh[k] * p1;
    s2[k] = kXOverSinh[k] * p2;
    p1 *= a1;
    p2 *= a2;
  }
  std::complex<double> prod[K] = {};
  for (int i = 0; i < K; ++i)
    for (int j = 0; i + j < K; ++j)
      for (int k = 0; i + j + k < K; ++k) prod[i + j + k] += s1[i] * s2[j] * cosc[k];
  // Drop the constant 1, divide by t, evaluate by Horner.
  std::complex<double> acc = 0.0;
  for (int k = K - 1; k >= 1; --k) acc = acc * t + prod[k];
  return acc;
}

}  // namespace detail

inline std::complex<double> phi_hbar(std::complex<double> z, const QDilogParams& params) {
  using detail::kPi;
  const double hbar = params.hbar;
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DilogError("hbar must be positive");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DilogError("z must be finite");
  const double margin = kPi * (1.0 + hbar) - std::abs(z.imag());
  if (!(margin > 0.0)) throw DilogError("|Im z| must be below pi (1 + hbar)");
  if (params.nodes < 16) throw DilogError("at least 16 quadrature nodes are needed");

  double pmax = params.pmax;
  if (pmax <= 0.0) pmax = std::max(5.0, (std::log(4.0 / margin) + 15.0 * std::log(10.0)) / margin);
  // The integrand decays like 4 e^{-margin p}.
  if (!std::isfinite(pmax) || 4.0 * std::exp(-margin * pmax) / margin > 1e-14)
    throw DilogError("P_max too small for the integrand tail to fall below 1e-14");
  const double r = params.r < 0.0 ? 1e-3 / (1.0 + hbar) : params.r;
  if (r >= pmax) throw DilogError("series radius r must be below P_max");

  const double c = 1.0 / (kPi * kPi * hbar);
  auto integrand = [&](double p) -> std::complex<double> {
    if (p < r) return c * detail::small_p_bracket(p * p, z, hbar);
    return std::cos(p * z) / (std::sinh(kPi * p) * std::sinh(kPi * hbar * p)) - c / (p * p);
  };

  using Rule = boost::math::quadrature::gauss<double, 16>;
  const int panels = params.nodes / 16;
  const double h = pmax / panels;
  std::complex<double> sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = i * h, hi = (i + 1) * h;
    sum += Rule::integrate([&](double p) { return integrand(p).real(); }, lo, hi);
    if (z.imag() != 0.0)
      sum += std::complex<double>(0.0, Rule::integrate([&](double p) { return integrand(p).imag(); }, lo, hi));
  }
  return z / 2.0 - kPi * hbar * (sum - c / pmax);
}

enum class DilogCheck { Difference, Quasi1, Quasi2, Semiclassical };

inline const char* to_string(DilogCheck k) {
  switch (k) {
    case DilogCheck::Difference: return "difference";
    case DilogCheck::Quasi1: return "quasi1";
    case DilogCheck::Quasi2: return "quasi2";
    default: return "semiclassical";
  }
}

inline double default_tolerance(DilogCheck k) {
  switch (k) {
    case DilogCheck::Difference: return 1e-8;
    case DilogCheck::Semiclassical: return 5e-3;
    default: return 1e-6;
  }
}

struct DilogCheckResult {
  std::complex<double> value;  // Phi(z)
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual <= tolerance; }
};

/// difference: Phi(z) - Phi(-z) = z
/// quasi1:     Phi(z + i pi hbar) - Phi(z - i pi hbar) = 2 pi i hbar / (1 + e^{-z})
/// quasi2:     Phi(z + i pi) - Phi(z - i pi) = 2 pi i / (1 + e^{-z/hbar})
/// semiclassical: Phi(z) = log(1 + e^z) up to O(hbar^2)
inline DilogCheckResult dilog_check(DilogCheck kind, std::complex<double> z, QDilogParams params) {
  using detail::kPi;
  const std::complex<double> i(0.0, 1.0);
  const double hbar = params.hbar;
  DilogCheckResult out;
  out.value = phi_hbar(z, params);
  out.tolerance = default_tolerance(kind);
  switch (kind) {
    case DilogCheck::Difference:
      out.residual = std::abs(out.value - phi_hbar(-z, params) - z);
      break;
    case DilogCheck::Quasi1: {
      const auto lhs = phi_hbar(z + i * kPi * hbar, params) - phi_hbar(z - i * kPi * hbar, params);
      out.residual = std::abs(lhs - 2.0 * kPi * i * hbar / (1.0 + std::exp(-z)));
      break;
    }
    case DilogCheck::Quasi2: {
      const auto lhs = phi_hbar(z + i * kPi, params) - phi_hbar(z - i * kPi, params);
      out.residual = std::abs(lhs - 2.0 * kPi * i / (1.0 + std::exp(-z / hbar)));
      break;
    }
    case DilogCheck::Semiclassical:
      out.residual = std::abs(out.value - std::log(1.0 + std::exp(z)));
      break;
  }
  return out;
}

}  // namespace teich
