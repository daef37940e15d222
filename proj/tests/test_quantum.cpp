#include "teich/quantum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using namespace teich;

namespace {

const FatGraph torus = once_punctured_torus();

QGeodesic qa() { return quantum_geodesic(torus, torus_paths::A); }
QGeodesic qb() { return quantum_geodesic(torus, torus_paths::B); }
QGeodesic qx() { return quantum_geodesic(torus, torus_paths::AB_inv); }

std::complex<double> phi_at(std::complex<double> z, double hbar) {
  QDilogParams p;
  p.hbar = hbar;
  return phi_hbar(z, p);
}

}  // namespace

TEST(QuantumGeodesic, TorusA) {
  const QGeodesic a = qa();
  EXPECT_EQ(a.op.size(), 3u);
  for (const auto& [m, c] : a.op.terms()) EXPECT_EQ(c, LaurentPoly(1));
  EXPECT_EQ(specialize(a.op), geodesic_function(torus, torus_paths::A));
  EXPECT_TRUE(is_star_fixed(a.op));
  EXPECT_THROW(quantum_geodesic(torus, {0, 5, 0, 3}), UnsupportedError);
}

TEST(QuantumSkein, TorusPair) {
  const QSkeinResult s = qskein_decompose(torus, qa(), qb(), qx());
  EXPECT_TRUE(s.star_fixed);
  EXPECT_TRUE(s.classical_match);
  EXPECT_TRUE(s.reverse_match);
  EXPECT_TRUE(s.ab_inv_match);
  EXPECT_EQ(s.ab_inv_coeff, LaurentPoly::rho_power(2));
  // Only the doubled classical term picks up a correction, q + q^{-1}.
  QExpPoly expect(3);
  expect.add_term({-2, -1, -1}, 1);
  expect.add_term({-2, 1, -1}, 1);
  expect.add_term({0, 1, -1}, LaurentPoly::rho_power(4) + LaurentPoly::rho_power(-4));
  expect.add_term({2, 1, -1}, 1);
  expect.add_term({2, 1, 1}, 1);
  EXPECT_EQ(s.g_ab, expect);
}

TEST(QuantumSkein, WrongCoefficientBreaksHermiticity) {
  const OmegaMatrix w = omega_matrix(torus);
  const QExpPoly ab = qmul(qa().op, qb().op, w);
  const QExpPoly bad = rho(-2) * (ab - rho(-2) * qx().op);
  EXPECT_FALSE(is_star_fixed(bad));
}

TEST(QuantumSkein, Noncommutative) {
  const OmegaMatrix w = omega_matrix(torus);
  EXPECT_NE(qmul(qa().op, qb().op, w), qmul(qb().op, qa().op, w));
}

TEST(QCommutator, TorusPair) {
  const QCommutatorResult r = qcommutator_check(torus, qa(), qb(), qx().op);
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, rho(4) - rho(-4));
  EXPECT_TRUE(r.matches_q);
  EXPECT_FALSE(r.matches_sqrt_q);
  EXPECT_TRUE(r.classical_limit_ok);
}

TEST(QCommutator, SelfPair) {
  const OmegaMatrix w = omega_matrix(torus);
  const QGeodesic a = qa();
  const QCommutatorResult r = qcommutator_check(torus, a, a, qmul(a.op, a.op, w));
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, rho(2) - rho(-2));
}

TEST(QCommutator, ClassicalLimitIsGoldman) {
  const OmegaMatrix w = omega_matrix(torus);
  const ExpPoly expect =
      poisson_bracket(geodesic_function(torus, torus_paths::A), geodesic_function(torus, torus_paths::B), w);
  EXPECT_EQ(classical_limit_commutator(qa().op, qb().op, w), expect);
}

TEST(EmptyLoop, TorusA) {
  for (const QGeodesic& g : {qa(), qb()}) {
    const EmptyLoopResult r = empty_loop_constant(torus, g);
    ASSERT_TRUE(r.scalar.has_value());
    EXPECT_EQ(*r.scalar, LaurentPoly(2));
    EXPECT_EQ(r.scalar->at_one(), 2);
    EXPECT_EQ(r.scalar->star(), *r.scalar);
    EXPECT_TRUE(r.candidate_classical);
    EXPECT_TRUE(r.candidate_star_fixed);
  }
}

TEST(QuantumCentrality, FaceCommutesWithGeodesics) {
  const OmegaMatrix w = omega_matrix(torus);
  const QExpPoly p = QExpPoly::monomial(face_multiplicity(torus, torus.faces()[0]));
  for (const QGeodesic& g : {qa(), qb(), qx()}) EXPECT_EQ(qmul(p, g.op, w), qmul(g.op, p, w));
}

TEST(Dilog, FrozenReferenceValues) {
  // 50-digit reference evaluations of the same integral, computed independently.
  EXPECT_NEAR(phi_at(1.0, 0.3).real(), 1.3417956420372701, 1e-11);
  EXPECT_NEAR(phi_at(0.0, 1.0).real(), 1.0, 1e-11);
  EXPECT_NEAR(phi_at(2.0, 0.5).real(), 2.1727881624290514, 1e-11);
  EXPECT_NEAR(phi_at(-1.5, 0.1).real(), 0.20386938004635336, 1e-11);
  EXPECT_NEAR(phi_at(-4.0, 2.0).real(), 0.3455763248581027, 1e-11);
  EXPECT_NEAR(phi_at(4.5, 0.05).real(), 4.5110925509042578, 1e-11);
  const auto c = phi_at({0.5, 0.7}, 0.4);
  EXPECT_NEAR(c.real(), 0.97879699666304245, 1e-11);
  EXPECT_NEAR(c.imag(), 0.42983640175392159, 1e-11);
}

TEST(Dilog, DifferenceProperty) {
  QDilogParams p;
  p.hbar = 0.3;
  EXPECT_LE(dilog_check(DilogCheck::Difference, 1.0, p).residual, 1e-8);
}

TEST(Dilog, SemiclassicalLimit) {
  EXPECT_NEAR(phi_at(1.0, 0.01).real(), std::log(1 + std::exp(1.0)), 5e-3);
  EXPECT_NEAR(phi_at(1.0, 0.01).real(), 1.3132617, 5e-3);
}

TEST(Dilog, QuasiPeriodicity) {
  QDilogParams p;
  p.hbar = 0.4;
  EXPECT_LE(dilog_check(DilogCheck::Quasi1, 0.5, p).residual, 1e-6);
  for (double h : {0.5, 1.0, 1.5}) {
    p.hbar = h;
    for (double z : {-1.0, 0.0, 0.7}) EXPECT_LE(dilog_check(DilogCheck::Quasi2, z, p).residual, 1e-6) << h << " " << z;
  }
}

TEST(Dilog, RealOnTheRealAxis) {
  for (double h : {0.05, 0.5, 2.0})
    for (double z = -5.0; z <= 5.0; z += 1.0) EXPECT_LT(std::abs(phi_at(z, h).imag()), 1e-8);
}

TEST(Dilog, DomainErrors) {
  QDilogParams p;
  p.hbar = 0.0;
  EXPECT_THROW(phi_hbar(1.0, p), DilogError);
  p.hbar = 0.5;
  EXPECT_THROW(phi_hbar({0.0, 5.0}, p), DilogError);
  p.pmax = 1.0;
  EXPECT_THROW(phi_hbar(1.0, p), DilogError);
  p.pmax = 0.0;
  p.nodes = 4;
  EXPECT_THROW(phi_hbar(1.0, p), DilogError);
}

TEST(Dilog, ParametersAgree) {
  QDilogParams a, b;
  a.hbar = b.hbar = 0.7;
  b.nodes = 8192;
  b.r = 1e-2;
  b.pmax = 40.0;
  EXPECT_NEAR(std::abs(phi_hbar({0.3, 0.2}, a) - phi_hbar({0.3, 0.2}, b)), 0.0, 1e-11);
}
