#include "teich/mcg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace teich;

namespace {

std::vector<double> labels(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> z(n);
  for (double& x : z) x = u(rng);
  return z;
}

double rel(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

}  // namespace

TEST(Flip, PhiIsStable) {
  EXPECT_DOUBLE_EQ(phi(0.0), std::log(2.0));
  EXPECT_DOUBLE_EQ(phi(800.0), 800.0);
  EXPECT_GT(phi(-800.0), -1.0);
  EXPECT_NEAR(phi(1.3) - phi(-1.3), 1.3, 1e-15);
}

TEST(Flip, TorusAtZeroLabels) {
  const FlipRecord r = flip(once_punctured_torus(), 0);
  EXPECT_EQ(r.after.labels()[0], 0.0);
  EXPECT_NEAR(r.after.label(1), 2 * std::log(2.0), 1e-15);
  EXPECT_NEAR(r.after.label(2), -2 * std::log(2.0), 1e-15);
  EXPECT_EQ(r.after.topology(), r.before.topology());
  EXPECT_EQ(r.corners, (std::array<int, 4>{1, 2, 1, 2}));
}

TEST(Flip, TorusMapMatchesTheMirroredFormula) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const auto z = labels(rng, 3);
    const auto m = torus_flip_map({z[0], z[1], z[2]});
    EXPECT_NEAR(m[0], -z[0], 1e-15);
    EXPECT_NEAR(m[1], z[2] - 2 * phi(-z[0]), 1e-12);
    EXPECT_NEAR(m[2], z[1] + 2 * phi(z[0]), 1e-12);
    const auto p = mirrored_torus_map({z[0], z[1], z[2]});
    const auto c = torus_flip_map({z[0], z[2], z[1]});
    EXPECT_NEAR(c[0], p[0], 1e-12);
    EXPECT_NEAR(c[2], p[1], 1e-12);
    EXPECT_NEAR(c[1], p[2], 1e-12);
  }
}

TEST(Flip, SelfLoopIsRejected) {
  // A theta graph with one edge turned into a loop: vertices {0,1,2} and {3,4,5}.
  const FatGraph g({1, 2, 0, 4, 5, 3}, {0, 0, 0});
  EXPECT_THROW(flip(g, 0), FlipError);
  EXPECT_THROW(flip(once_punctured_torus(), 3), FlipError);
}

TEST(Flip, TetrahedronKeepsTopology) {
  const FatGraph t = tetrahedron();
  for (int e = 0; e < 6; ++e) EXPECT_EQ(flip(t, e).after.topology(), t.topology());
}

TEST(FlipProperty, PerimetersAreInvariant) {
  std::mt19937_64 rng(32);
  for (const FatGraph& g0 : {once_punctured_torus(), tetrahedron()}) {
    for (int k = 0; k < 100; ++k) {
      const FatGraph g = g0.with_labels(labels(rng, g0.edge_count()));
      for (int e = 0; e < g.edge_count(); ++e) {
        const auto a = perimeters(g), b = perimeters(flip(g, e).after);
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
      }
    }
  }
}

TEST(FlipProperty, TracesSurviveTransport) {
  std::mt19937_64 rng(33);
  for (const FatGraph& g0 : {once_punctured_torus(), tetrahedron()}) {
    for (int k = 0; k < 30; ++k) {
      const FatGraph g = g0.with_labels(labels(rng, g0.edge_count()));
      std::vector<PathWord> paths;
      if (is_standard_torus(g)) paths = {torus_paths::A, torus_paths::B, torus_paths::AB_inv, torus_paths::hole};
      for (int j = 0; j < 10; ++j) paths.push_back(random_closed_path(g, static_cast<int>(rng() % g.dart_count()), rng, 8));
      for (int e = 0; e < g.edge_count(); ++e) {
        const FlipRecord r = flip(g, e);
        for (const PathWord& p : paths) {
          const PathWord q = transport_path(r, p);
          const double before = eval(geodesic_function(r.before, p), r.before.labels());
          const double after = eval(geodesic_function(r.after, q), r.after.labels());
          EXPECT_LE(rel(after, before), 1e-10);
        }
      }
    }
  }
}

TEST(Flip, TransportAwayFromTheQuadrilateral) {
  // Triangular prism: top triangle 0,1,2, bottom 3,4,5, rungs 0-3, 1-4, 2-5.
  const FatGraph prism({5, 2, 14, 4, 16, 12, 11, 8, 15, 10, 17, 13, 0, 6, 1, 7, 3, 9}, std::vector<double>(9, 0.0));
  std::mt19937_64 rng(38);
  int seen = 0;
  for (int e = 0; e < 9; ++e) {
    const FlipRecord r = flip(prism, e);
    const int u = prism.vertex_of(2 * e), v = prism.vertex_of(2 * e + 1);
    for (int k = 0; k < 300; ++k) {
      const PathWord p = random_closed_path(prism, static_cast<int>(rng() % 18), rng, 8);
      const bool away = std::none_of(p.begin(), p.end(), [&](int d) {
        for (int x : {prism.vertex_of(d), prism.vertex_of(FatGraph::opposite(d))})
          if (x == u || x == v) return true;
        return false;
      });
      if (!away) continue;
      ++seen;
      EXPECT_EQ(transport_path(r, p), p);
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Flip, IsomorphismFinder) {
  const FatGraph t = tetrahedron();
  EXPECT_TRUE(find_isomorphism(t, t, identity_edge_map(6)).has_value());
  std::vector<int> swapped = identity_edge_map(6);
  std::swap(swapped[0], swapped[1]);
  EXPECT_FALSE(find_isomorphism(t, t, swapped).has_value());
  // Flipping twice reverses the edge but gives back the same graph.
  const FatGraph twice = flip(flip(t, 2).after, 2).after;
  EXPECT_NE(twice.sigma(), t.sigma());
  EXPECT_TRUE(find_isomorphism(t, twice, identity_edge_map(6)).has_value());
}

TEST(Relations, InvolutionOnTheTorus) {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 100; ++k) {
    const FatGraph g = once_punctured_torus(labels(rng, 3));
    for (int e = 0; e < 3; ++e) {
      const CheckReport r = check_relations(RelationMode::Involution, g, {e});
      EXPECT_TRUE(r.passed) << r.residual.value_or(-1);
    }
  }
}

TEST(Relations, CommuteAndPentagonOnTheTetrahedron) {
  std::mt19937_64 rng(35);
  const FatGraph t0 = tetrahedron();
  for (int k = 0; k < 100; ++k) {
    const FatGraph t = t0.with_labels(labels(rng, 6));
    for (int e1 = 0; e1 < 6; ++e1)
      for (int e2 = e1 + 1; e2 < 6; ++e2) {
        const RelationMode mode = shared_vertices(t, e1, e2) == 0 ? RelationMode::Commute : RelationMode::Pentagon;
        const CheckReport r = check_relations(mode, t, {e1, e2});
        EXPECT_TRUE(r.passed) << r.name << " " << e1 << "," << e2;
      }
  }
}

TEST(Relations, Preconditions) {
  const FatGraph t = tetrahedron();
  EXPECT_THROW(check_relations(RelationMode::Commute, t, {0, 1}), FlipError);
  EXPECT_THROW(check_relations(RelationMode::Pentagon, t, {0, 5}), FlipError);
  EXPECT_THROW(check_relations(RelationMode::Pentagon, once_punctured_torus(), {0, 1}), FlipError);
}

TEST(Modular, TorusMap) {
  const CheckReport zero = torus_modular_check({0, 0, 0});
  EXPECT_TRUE(zero.passed);
  // U' = 1 and V' = 1/2 at zero labels.
  const auto m = torus_flip_map({0, 0, 0});
  EXPECT_NEAR(std::exp(m[1] / 2), 0.5, 1e-15);
  std::mt19937_64 rng(36);
  for (int k = 0; k < 100; ++k) {
    const auto z = labels(rng, 3);
    EXPECT_TRUE(torus_modular_check({z[0], z[1], z[2]}).passed);
    const auto f = torus_flip_map({z[0], z[1], z[2]});
    EXPECT_NEAR(std::exp(f[0] / 2) * std::exp(z[0] / 2), 1.0, 1e-15);
  }
}

TEST(Modular, CasimirIsFlipInvariant) {
  const ExpPoly c = torus_casimir(once_punctured_torus());
  std::mt19937_64 rng(37);
  for (int k = 0; k < 100; ++k) {
    const auto z = labels(rng, 3);
    const auto m = torus_flip_map({z[0], z[1], z[2]});
    EXPECT_LE(rel(eval(c, std::vector<double>(m.begin(), m.end())), eval(c, z)), 1e-10);
  }
}
