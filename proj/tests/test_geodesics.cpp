#include "teich/geodesics.hpp"
#include "teich/hyperbolic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace teich;

namespace {

ExpPoly poly(std::initializer_list<std::pair<ExpVector, int>> terms) {
  ExpPoly f(3);
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

double eval_entry(const ExpPoly& f, const std::vector<double>& z) { return eval(f, z); }

MoebiusMap<double> numeric(const MatrixEP& m, const std::vector<double>& z) {
  return MoebiusMap<double>::from_gl2(eval_entry(m.a, z), eval_entry(m.b, z), eval_entry(m.c, z), eval_entry(m.d, z));
}

const FatGraph torus = once_punctured_torus();

}  // namespace

TEST(Geodesics, TorusWords) {
  EXPECT_EQ(word_string(torus, torus_paths::B), "R X_{z1} L X_{z0}");
  EXPECT_EQ(word_string(torus, torus_paths::A), "L X_{z2} R X_{z0}");
  EXPECT_EQ(word_string(torus, torus_paths::hole), "L X_{z2} L X_{z1} L X_{z0} L X_{z2} L X_{z1} L X_{z0}");
}

TEST(Geodesics, InvalidPaths) {
  EXPECT_THROW(turn_sequence(torus, {0, 1}), PathError);
  EXPECT_THROW(turn_sequence(torus, {}), PathError);
  EXPECT_THROW(turn_sequence(torus, {0, 9}), PathError);
  EXPECT_THROW(turn_sequence(tetrahedron(), {0, 6}), PathError);
}

TEST(Geodesics, BasicMatrixIdentities) {
  const MatrixEP x = x_matrix(3, 1);
  EXPECT_EQ(x * x, -identity_matrix(3));
  EXPECT_EQ(r_matrix(3) * l_matrix(3), -identity_matrix(3));
  EXPECT_EQ(l_matrix(3) * r_matrix(3), -identity_matrix(3));
}

TEST(Geodesics, TracesOfTheTorusCycles) {
  EXPECT_EQ(geodesic_function(torus, torus_paths::A), poly({{{1, 0, 1}, 1}, {{-1, 0, -1}, 1}, {{1, 0, -1}, 1}}));
  EXPECT_EQ(geodesic_function(torus, torus_paths::B), poly({{{1, 1, 0}, 1}, {{-1, 1, 0}, 1}, {{-1, -1, 0}, 1}}));
  EXPECT_EQ(geodesic_function(torus, torus_paths::AB_inv), poly({{{0, -1, -1}, 1}, {{0, -1, 1}, 1}, {{0, 1, 1}, 1}}));
}

TEST(Geodesics, MatrixOfB) {
  const MatrixEP q = path_matrix(torus, torus_paths::B);
  EXPECT_EQ(q.a, poly({{{-1, -1, 0}, 1}, {{-1, 1, 0}, 1}}));
  EXPECT_EQ(q.b, poly({{{1, 1, 0}, -1}}));
  EXPECT_EQ(q.c, poly({{{-1, 1, 0}, -1}}));
  EXPECT_EQ(q.d, poly({{{1, 1, 0}, 1}}));
}

TEST(Geodesics, HoleTrace) {
  EXPECT_EQ(geodesic_function(torus, torus_paths::hole), poly({{{2, 2, 2}, 1}, {{-2, -2, -2}, 1}}));
}

TEST(Geodesics, EvalAtZeroLabels) {
  const std::vector<double> z{0, 0, 0};
  EXPECT_DOUBLE_EQ(eval(geodesic_function(torus, torus_paths::A), z), 3.0);
  EXPECT_DOUBLE_EQ(eval(geodesic_function(torus, torus_paths::B), z), 3.0);
}

TEST(Geodesics, RotationInvariance) {
  EXPECT_EQ(geodesic_function(torus, {5, 0}), geodesic_function(torus, torus_paths::A));
  const PathWord h = torus_paths::hole;
  for (std::size_t k = 1; k < h.size(); ++k) {
    PathWord r(h.begin() + k, h.end());
    r.insert(r.end(), h.begin(), h.begin() + k);
    EXPECT_EQ(geodesic_function(torus, r), geodesic_function(torus, h));
  }
}

TEST(Geodesics, GraphSimple) {
  EXPECT_TRUE(graph_simple(torus_paths::A));
  EXPECT_TRUE(graph_simple(torus_paths::B));
  EXPECT_TRUE(graph_simple(torus_paths::AB_inv));
  EXPECT_FALSE(graph_simple({0, 5, 0, 3}));
  EXPECT_TRUE(graph_simple({}));
}

TEST(Geodesics, ProductTraces) {
  const ProductTraces t = product_traces(torus, torus_paths::A, torus_paths::B);
  EXPECT_EQ(t.pq_inv, geodesic_function(torus, torus_paths::AB_inv));
  EXPECT_EQ(t.pq, poly({{{-2, -1, -1}, 1}, {{-2, 1, -1}, 1}, {{0, 1, -1}, 2}, {{2, 1, -1}, 1}, {{2, 1, 1}, 1}}));
  // The concatenated word is the same closed curve.
  EXPECT_EQ(geodesic_function(torus, {0, 5, 0, 3}), t.pq);
  EXPECT_THROW(product_traces(torus, torus_paths::A, torus_paths::AB_inv), PathError);
}

TEST(Geodesics, CayleyHamilton) {
  const ExpPoly g = geodesic_function(torus, torus_paths::A);
  const ProductTraces t = product_traces(torus, torus_paths::A, torus_paths::A);
  EXPECT_EQ(t.pq + ExpPoly::constant(3, 2), g * g);
  EXPECT_EQ(t.pq_inv, ExpPoly::constant(3, 2));
}

TEST(Geodesics, Goldman) {
  const OmegaMatrix w = omega_matrix(torus);
  EXPECT_TRUE(goldman_check(torus, torus_paths::A, torus_paths::B, w).passed);
  EXPECT_TRUE(torus_algebra_check(torus).passed);
  const ExpPoly ga = geodesic_function(torus, torus_paths::A);
  EXPECT_TRUE(poisson_bracket(ga, ga, w).is_zero());
}

TEST(Geodesics, Casimir) {
  const OmegaMatrix w = omega_matrix(torus);
  const ExpPoly c = torus_casimir(torus);
  EXPECT_EQ(c, poly({{{0, 0, 0}, 2}, {{2, 2, 2}, -1}, {{-2, -2, -2}, -1}}));
  for (const PathWord& p : {torus_paths::A, torus_paths::B, torus_paths::AB_inv})
    EXPECT_TRUE(poisson_bracket(c, geodesic_function(torus, p), w).is_zero());
  EXPECT_DOUBLE_EQ(eval(c, std::vector<double>{0, 0, 0}), 0.0);
  EXPECT_THROW(torus_casimir(tetrahedron()), std::invalid_argument);
}

TEST(Geodesics, CasimirDependsOnPerimeterOnly) {
  const ExpPoly c = torus_casimir(torus);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int k = 0; k < 100; ++k) {
    const std::vector<double> z{u(rng), u(rng), u(rng)};
    const double s = u(rng);
    const std::vector<double> y{z[0] - s, z[1], z[2] + s};
    EXPECT_NEAR(eval(c, y), eval(c, z), 1e-10 * std::max(1.0, std::abs(eval(c, z))));
  }
}

TEST(Geodesics, GammaBMapsTheTriple) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const std::vector<double> z{u(rng), u(rng), u(rng)};
    const MoebiusMap<double> m = numeric(path_matrix(torus, torus_paths::B), z);
    EXPECT_NEAR(apply(m, UhpPoint::boundary(0.0)).x(), -1.0, 1e-12);
    const UhpPoint y = apply(m, UhpPoint::boundary(std::exp(z[0])));
    EXPECT_TRUE(y.is_infinity() || std::abs(y.x()) > 1e12);
    EXPECT_NEAR(apply(m, UhpPoint::infinity()).x(), -1.0 - std::exp(-z[1]), 1e-12);
  }
}

TEST(GeodesicsProperty, DeterminantSignsAndPositivity) {
  std::mt19937_64 rng(23);
  for (const FatGraph& g : {once_punctured_torus(), tetrahedron()}) {
    for (int k = 0; k < 60; ++k) {
      const PathWord p = random_closed_path(g, static_cast<int>(rng() % g.dart_count()), rng, 9);
      const MatrixEP m = path_matrix(g, p);
      EXPECT_EQ(m.det(), ExpPoly::constant(g.edge_count(), 1));
      EXPECT_TRUE(has_sign_structure(m));
      const ExpPoly tr = m.trace();
      for (const auto& [e, c] : tr.terms()) {
        EXPECT_GT(c, 0);
        EXPECT_EQ(boost::multiprecision::denominator(c), 1);
      }
    }
  }
}

TEST(GeodesicsProperty, SkeinOnRandomPairs) {
  std::mt19937_64 rng(24);
  for (const FatGraph& g : {once_punctured_torus(), tetrahedron()}) {
    for (int k = 0; k < 50; ++k) {
      const int start = static_cast<int>(rng() % g.dart_count());
      const PathWord p = random_closed_path(g, start, rng, 8), q = random_closed_path(g, start, rng, 8);
      EXPECT_TRUE(skein_check(g, p, q).passed);
    }
  }
}

TEST(RMatrix, LocalTensorIdentity) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  EXPECT_LE(local_tensor_residual(0.0, 0.0, 1.0, 0.25), 1e-15);
  for (int k = 0; k < 20; ++k) {
    const double a = u(rng), b = u(rng);
    EXPECT_LE(local_tensor_residual(a, b, 1.0, 0.25), 1e-12);
    EXPECT_LE(local_tensor_residual(a, b, -1.0, -0.25), 1e-12);
  }
  // With {z1, z4} = +1 the coefficient cannot be -1/4.
  EXPECT_GT(local_tensor_residual(0.3, -0.4, 1.0, -0.25), 0.1);
}

TEST(RMatrix, GlobalIdentity) {
  const Mat2<double> one{1, 0, 0, 1};
  EXPECT_NEAR(global_rmatrix_residual(one, one), 0.0, 1e-15);
  std::mt19937_64 rng(26);
  for (int k = 0; k < 1000; ++k) EXPECT_LE(global_rmatrix_residual(random_sl2(rng), random_sl2(rng)), 1e-12);
}
