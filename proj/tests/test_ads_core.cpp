#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "adsrigid/ads_core.hpp"
#include "adsrigid/error.hpp"
#include "oracles.hpp"

using namespace adsrigid;

namespace {

AmbientVector random_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

// A random quadric point: (cosh a * (cos b, sin b), sinh a-free time part).
AmbientVector random_quadric_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double x1 = u(rng), x2 = u(rng), t = std::numbers::pi * u(rng);
  const double r = std::sqrt(1.0 + x1 * x1 + x2 * x2);
  return {x1, x2, r * std::cos(t), r * std::sin(t)};
}

}  // namespace

TEST(Bilinear22, Signature) {
  EXPECT_EQ(bilinear22({1, 0, 0, 0}, {1, 0, 0, 0}), 1.0);
  EXPECT_EQ(bilinear22({0, 1, 0, 0}, {0, 1, 0, 0}), 1.0);
  EXPECT_EQ(bilinear22({0, 0, 1, 0}, {0, 0, 1, 0}), -1.0);
  EXPECT_EQ(bilinear22({0, 0, 0, 1}, {0, 0, 0, 1}), -1.0);
  EXPECT_EQ(bilinear22({1, 1, 1, 0}, {0, 1, 0, 1}), 1.0);
}

TEST(Bilinear22, SymmetricAndMatchesOracle) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const AmbientVector x = random_vector(rng), y = random_vector(rng);
    EXPECT_EQ(bilinear22(x, y), bilinear22(y, x));
    EXPECT_NEAR(bilinear22(x, y), oracle::form22(x.coords, y.coords), 1e-14);
  }
}

TEST(QuadricPredicates, OnQuadricAndNull) {
  EXPECT_TRUE(on_quadric({0, 0, 1, 0}));
  EXPECT_TRUE(on_quadric({0, 0, 0, 1}));
  EXPECT_FALSE(on_quadric({1, 0, 0, 0}));
  EXPECT_TRUE(is_null({1, 0, 0, 1}));
  EXPECT_FALSE(is_null({1, 0, 0, 0}));
}

TEST(ClassifyTangent, Examples) {
  const AmbientVector p{0, 0, 1, 0};
  EXPECT_EQ(classify_tangent(p, {1, 0, 0, 0}), TangentClass::Spacelike);
  EXPECT_EQ(classify_tangent(p, {0, 0, 0, 1}), TangentClass::Timelike);
  EXPECT_EQ(classify_tangent(p, {1, 0, 0, 1}), TangentClass::Lightlike);
}

TEST(ClassifyTangent, RejectsBadInput) {
  EXPECT_THROW(classify_tangent({1, 0, 0, 0}, {0, 1, 0, 0}), Error);
  // not tangent: <p, v> = -1
  EXPECT_THROW(classify_tangent({0, 0, 1, 0}, {0, 0, 1, 0}), Error);
}

TEST(GeodesicPoint, IdentityAtZero) {
  const AmbientVector p{0, 0, 1, 0};
  for (const AmbientVector& v : {AmbientVector{1, 0, 0, 0}, AmbientVector{0, 0, 0, 1},
                                 AmbientVector{1, 0, 0, 1}}) {
    EXPECT_LT((geodesic_point(p, v, 0.0).coords - p.coords).norm(), 1e-15);
  }
}

TEST(GeodesicPoint, TimelineQuarterTurn) {
  const AmbientVector q = geodesic_point({0, 0, 1, 0}, {0, 0, 0, 1}, std::numbers::pi / 2.0);
  EXPECT_LT((q.coords - Eigen::Vector4d(0, 0, 0, 1)).norm(), 1e-15);
}

TEST(GeodesicPoint, StaysOnQuadric) {
  std::mt19937_64 rng(2);
  const AmbientVector p{0, 0, 1, 0};
  const AmbientVector dirs[] = {{1, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0.6, 0.8, 0, 0}};
  for (const auto& v : dirs)
    for (double t = -5.0; t <= 5.0; t += 0.25) {
      const AmbientVector g = geodesic_point(p, v, t);
      EXPECT_NEAR(oracle::form22(g.coords, g.coords), -1.0, 1e-10 * std::cosh(t) * std::cosh(t));
    }
  // Isometric images of the base directions at random quadric points.
  for (int i = 0; i < 20; ++i) {
    const IsometryPair g{oracle::random_unimodular(rng), oracle::random_unimodular(rng)};
    const AmbientVector q = apply_isometry(g, p);
    for (const auto& v : dirs) {
      const AmbientVector w = apply_isometry(g, v);
      for (double t : {-3.0, 1.0, 4.5}) {
        const AmbientVector x = geodesic_point(q, w, t);
        const double scale = std::max(1.0, x.coords.squaredNorm());
        EXPECT_NEAR(oracle::form22(x.coords, x.coords), -1.0, 1e-10 * scale);
      }
    }
  }
}

TEST(GeodesicPoint, RejectsNonUnitVelocity) {
  EXPECT_THROW(geodesic_point({0, 0, 1, 0}, {2, 0, 0, 0}, 1.0), Error);
  EXPECT_THROW(geodesic_point({0, 0, 1, 0}, {0, 0, 0, 0.5}, 1.0), Error);
}

TEST(MatrixModel, BasePointIsIdentity) {
  EXPECT_EQ(to_matrix_model({0, 0, 1, 0}), Eigen::Matrix2d::Identity());
  EXPECT_NEAR(to_matrix_model({1, 0, 0, 0}).determinant(), -1.0, 1e-15);
}

TEST(MatrixModel, DeterminantIsMinusForm) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const AmbientVector x = random_vector(rng);
    EXPECT_NEAR(to_matrix_model(x).determinant() + oracle::form22(x.coords, x.coords), 0.0, 1e-12);
    EXPECT_LT((from_matrix_model(to_matrix_model(x)).coords - x.coords).norm(), 1e-15);
  }
}

TEST(Isometry, IdentityActsTrivially) {
  std::mt19937_64 rng(4);
  const AmbientVector x = random_vector(rng);
  EXPECT_LT((apply_isometry(IsometryPair::identity(), x).coords - x.coords).norm(), 1e-15);
}

TEST(Isometry, PreservesFormAndQuadric) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const IsometryPair g{oracle::random_unimodular(rng), oracle::random_unimodular(rng)};
    const AmbientVector x = random_vector(rng), y = random_vector(rng);
    const AmbientVector gx = apply_isometry(g, x), gy = apply_isometry(g, y);
    EXPECT_NEAR(oracle::form22(gx.coords, gy.coords), oracle::form22(x.coords, y.coords),
                1e-12 * std::max(1.0, gx.coords.norm() * gy.coords.norm()));
    const AmbientVector p = random_quadric_point(rng);
    EXPECT_TRUE(on_quadric(apply_isometry(g, p), 1e-10 * apply_isometry(g, p).coords.squaredNorm()));
  }
}

TEST(Isometry, GroupAction) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const IsometryPair g{oracle::random_unimodular(rng), oracle::random_unimodular(rng)};
    const IsometryPair h{oracle::random_unimodular(rng), oracle::random_unimodular(rng)};
    const AmbientVector x = random_vector(rng);
    const Eigen::Vector4d lhs = apply_isometry(g, apply_isometry(h, x)).coords;
    const Eigen::Vector4d rhs = apply_isometry(g.compose(h), x).coords;
    EXPECT_LT((lhs - rhs).norm(), 1e-10 * std::max(1.0, lhs.norm()));
    EXPECT_LT((apply_isometry(g.inverse(), apply_isometry(g, x)).coords - x.coords).norm(), 1e-9);
  }
}

TEST(Isometry, RejectsNonUnimodular) {
  IsometryPair g;
  g.left = 2.0 * Eigen::Matrix2d::Identity();
  EXPECT_THROW(apply_isometry(g, {0, 0, 1, 0}), Error);
}

TEST(Isometry, ClassificationIsInvariant) {
  std::mt19937_64 rng(7);
  const AmbientVector p{0, 0, 1, 0};
  const AmbientVector dirs[] = {{1, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}};
  for (int i = 0; i < 50; ++i) {
    const IsometryPair g{oracle::random_unimodular(rng), oracle::random_unimodular(rng)};
    for (const auto& v : dirs) {
      const AmbientVector gp = apply_isometry(g, p), gv = apply_isometry(g, v);
      const double tol = 1e-9 * std::max(1.0, gv.coords.squaredNorm());
      EXPECT_EQ(classify_tangent(gp, gv, tol), classify_tangent(p, v));
    }
  }
}

TEST(TimeOrientation, ConventionAtBasePoint) {
  const AmbientVector p{0, 0, 1, 0};
  EXPECT_LT((time_orientation(p).coords - Eigen::Vector4d(0, 0, 0, 1)).norm(), 1e-15);
  EXPECT_TRUE(future_directed(p, {0, 0, 0, 1}));
  EXPECT_FALSE(future_directed(p, {0, 0, 0, -1}));
}

TEST(TimeOrientation, FieldIsUnitTimelikeTangent) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const AmbientVector p = random_quadric_point(rng);
    const AmbientVector t = time_orientation(p);
    EXPECT_NEAR(oracle::form22(t.coords, t.coords), -1.0, 1e-12);
    EXPECT_NEAR(oracle::form22(t.coords, p.coords), 0.0, 1e-12);
  }
}
