#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "adsrigid/constructions.hpp"
#include "adsrigid/error.hpp"
#include "adsrigid/kernels.hpp"
#include "adsrigid/rigidity.hpp"
#include "oracles.hpp"

using namespace adsrigid;

namespace {

std::vector<Vec2> points(std::size_t n, std::uint64_t seed) {
  return kernels::sample_points(ChartBox{}, n, seed);
}

Mat2 quarter_turn() {
  Mat2 j;
  j << 0.0, -1.0, 1.0, 0.0;
  return j;
}

}  // namespace

TEST(BFromBdot, ZeroVariation) {
  const BMorphism m = b_from_Bdot(Mat2::Identity(), Mat2::Identity(), Mat2::Zero());
  EXPECT_EQ(m.b, Mat2::Zero());
  EXPECT_EQ(m.sharp_variation, Mat2::Zero());
}

TEST(BFromBdot, MatchesDefinition) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const ConvexPair p = random_convex_pair(71, i);
    const Mat2 j = oracle::rotation_for(p.metric);
    const Mat2 expected = (Mat2::Identity() + j * p.shape).inverse() * j * p.bdot;
    EXPECT_LT((b_from_Bdot(p.metric, p.shape, p.bdot).b - expected).norm(), 1e-12);
  }
}

TEST(BFromBdot, UmbilicTracelessVariation) {
  const double eps = 0.3;
  const Mat2 bdot = Eigen::Vector2d(eps, -eps).asDiagonal();
  const TraceConditions t = trace_conditions(Mat2::Identity(), Mat2::Identity(), bdot);
  EXPECT_LT(std::abs(t.tr_b), 1e-10);
  EXPECT_LT(std::abs(t.tr_jbb), 1e-10);
  EXPECT_TRUE(t.first_pair);
  EXPECT_TRUE(t.second_pair);
}

TEST(BFromBdot, GaussViolationIsDetected) {
  const double eps = 0.3;
  const TraceConditions t =
      trace_conditions(Mat2::Identity(), Mat2::Identity(), Mat2(eps * Mat2::Identity()));
  EXPECT_NEAR(t.tr_binv_bdot, 2.0 * eps, 1e-14);
  EXPECT_GT(std::abs(t.tr_jbb), 1e-3);
  EXPECT_FALSE(t.first_pair);
  EXPECT_FALSE(t.second_pair);
  EXPECT_TRUE(t.equivalent());
}

TEST(BFromBdot, SingularTransferThrows) {
  EXPECT_THROW(b_from_Bdot(Mat2::Identity(), quarter_turn(), Mat2::Identity()), Error);
}

TEST(TraceConditions, SelfAdjointVariationAlwaysGivesZero) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const ConvexPair p = random_convex_pair(72, i, false);
    const TraceConditions t = trace_conditions(p.metric, p.shape, p.bdot);
    EXPECT_LT(std::abs(t.tr_ab), 1e-10);
  }
}

TEST(TraceConditions, ProjectedPairsSatisfyAll) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const ConvexPair p = random_convex_pair(73, i);
    const TraceConditions t = trace_conditions(p.metric, p.shape, p.bdot);
    ASSERT_LT(std::abs(t.tr_binv_bdot), 1e-9) << i;
    ASSERT_LT(std::abs(t.tr_b), 1e-9) << i;
    ASSERT_LT(std::abs(t.tr_jbb), 1e-9) << i;
    ASSERT_LT(std::abs(t.tr_ab), 1e-9) << i;
    ASSERT_LT(std::abs(t.tr_ainv_b), 1e-9) << i;
    ASSERT_LT(t.cayley_hamilton, 1e-10) << i;
    ASSERT_TRUE(t.first_pair && t.second_pair) << i;
  }
}

TEST(TraceConditions, EquivalenceOnUnprojectedPairs) {
  int violated = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const ConvexPair p = random_convex_pair(74, i, false);
    const TraceConditions t = trace_conditions(p.metric, p.shape, p.bdot);
    EXPECT_TRUE(t.equivalent()) << i;
    violated += !t.first_pair;
  }
  EXPECT_GT(violated, 900);
}

TEST(TraceConditions, CayleyHamiltonOnFixtures) {
  for (const Immersion& f : {fuchsian_family(-0.6), graph_bump()})
    for (const Vec2& u : points(10, 75)) {
      const EmbeddingData d = embedding_data_at(f, u);
      const TraceConditions t = trace_conditions(d.metric, d.shape, Mat2::Zero());
      EXPECT_LT(t.cayley_hamilton, 1e-10);
    }
}

TEST(TraceConditions, RequiresInvertibleShape) {
  EXPECT_THROW(trace_conditions(Mat2::Identity(), Mat2::Zero(), Mat2::Zero()), Error);
}

TEST(BFromMu, ConstantField) {
  const SurfaceField field = surface_field(graph_bump());
  const ScalarField mu = [](const Vec2&) { return 1.7; };
  for (const Vec2& u : points(5, 76)) {
    const BMorphism m = b_from_mu(field, mu, u);
    const SurfaceSample x = field(u);
    const Mat2 sharp_j = sharp_complex_structure(x.metric, x.shape);
    EXPECT_LT((m.b - 1.7 * sharp_j).norm(), 1e-8);
    EXPECT_LT(m.v.norm(), 1e-9);
    const EndomorphismField bf = [&](const Vec2& y) {
      const SurfaceSample z = field(y);
      return Mat2(1.7 * sharp_complex_structure(z.metric, z.shape));
    };
    EXPECT_LT(sharp_codazzi_residual(field, bf, u), 1e-6);
  }
}

TEST(BFromMu, Traceless) {
  const SurfaceField field = surface_field(graph_bump());
  for (const auto& mu : oracle::smooth_fields(5, 77))
    for (const Vec2& u : points(10, 78))
      EXPECT_LT(std::abs(b_from_mu(field, mu, u).b.trace()), 1e-12);
}

TEST(BFromMu, SecondOrderCodazzi) {
  const SurfaceField field = surface_field(graph_bump());
  const Vec2 u(0.15, -0.25);
  for (const auto& mu : oracle::smooth_fields(3, 79)) {
    auto residual = [&](double h) {
      const FdScheme scheme{h, h, 0};
      const EndomorphismField b = [&](const Vec2& y) { return b_from_mu(field, mu, y, scheme).b; };
      return sharp_codazzi_residual(field, b, u, scheme);
    };
    const double r1 = residual(0.04), r2 = residual(0.02), r3 = residual(0.01);
    EXPECT_LT(r2, r1);
    EXPECT_GT(oracle::observed_order(r2, r3), 1.9);
  }
}

TEST(SharpCodazzi, RandomFieldFiresDetector) {
  const SurfaceField field = surface_field(graph_bump());
  const EndomorphismField b = [](const Vec2& y) {
    Mat2 m;
    m << std::sin(3.0 * y.y()), y.x() * y.y(), std::cos(2.0 * y.x()), -y.x();
    return m;
  };
  EXPECT_GT(sharp_codazzi_residual(field, b, Vec2(0.1, 0.3)), 1e-2);
}

TEST(SharpCodazzi, CodazziVariationTransfers) {
  // Bdot = Hess f + K f E is Codazzi for a metric of constant curvature K.
  const double s = -0.7;
  const Immersion f = fuchsian_family(s);
  const SurfaceField field = surface_field(f);
  const double k = oracle::fuchsian_curvature(s);
  const MetricField metric = [](const Vec2& y) { return oracle::fuchsian_metric(-0.7, y); };
  const ScalarField phi = [](const Vec2& y) { return std::sin(y.x()) * std::cos(0.5 * y.y()) + y.x() * y.y(); };
  const FdScheme scheme;
  const EndomorphismField bdot = [&](const Vec2& y) {
    const Christoffel c = christoffel(metric, y, scheme);
    const Vec2 d(fd::first(phi, y, 0, scheme.field_step, 2), fd::first(phi, y, 1, scheme.field_step, 2));
    Mat2 h;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        h(i, j) = fd::second(phi, y, i, j, scheme.field_step, 2) - c.gamma[i].col(j).dot(d);
    return Mat2(metric(y).inverse() * symmetrized(h) + k * phi(y) * Mat2::Identity());
  };
  const EndomorphismField b = [&](const Vec2& y) {
    const SurfaceSample x = field(y);
    return b_from_Bdot(x.metric, x.shape, bdot(y)).b;
  };
  for (const Vec2& u : points(5, 80)) {
    const Christoffel c = christoffel(metric, u, scheme);
    EXPECT_LT(exterior_derivative(bdot, c, u, scheme.field_step, 2).norm(), 1e-6);
    EXPECT_LT(sharp_codazzi_residual(field, b, u), 1e-6);
  }
}

TEST(VariationFormula, MatchesDerivativeOfLeftMetric) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const ConvexPair p = random_convex_pair(81, i);
    const double dt = 1e-4;
    const Mat2 numeric = (mess_metric(p.metric, p.shape + dt * p.bdot, MessSign::Plus) -
                          mess_metric(p.metric, p.shape - dt * p.bdot, MessSign::Plus)) /
                         (2.0 * dt);
    const BMorphism m = b_from_Bdot(p.metric, p.shape, p.bdot);
    EXPECT_LT((numeric - m.sharp_variation).norm(), 1e-6 * std::max(1.0, numeric.norm()));
  }
}

TEST(JbjSharp, Umbilic) {
  const Mat2 g = oracle::hyperbolic_metric(Vec2(0.3, 0.2));
  const JbjSharp r = jbj_sharp(g, 0.6 * Mat2::Identity());
  EXPECT_LT((r.op + 0.6 * Mat2::Identity()).norm(), 1e-14);
  EXPECT_NEAR(r.eigenvalues[0], -0.6, 1e-14);
  EXPECT_NEAR(r.eigenvalues[1], -0.6, 1e-14);
}

TEST(JbjSharp, BumpSpectrum) {
  const Immersion f = graph_bump();
  for (const Vec2& u : points(20, 82)) {
    const EmbeddingData d = embedding_data_at(f, u);
    const JbjSharp r = jbj_sharp(d.metric, d.shape);
    const auto k = principal_curvatures(d.shape);
    EXPECT_NEAR(r.eigenvalues[0], -k[1], 1e-8);
    EXPECT_NEAR(r.eigenvalues[1], -k[0], 1e-8);
    EXPECT_NEAR(r.op.trace(), -(k[0] + k[1]), 1e-10);
    EXPECT_LT(r.self_adjoint, 1e-10);
    EXPECT_LT(r.eigenvalues[1], 0.0);
  }
}

TEST(JbjSharp, RequiresStrongConvexity) {
  EXPECT_THROW(jbj_sharp(Mat2::Identity(), Eigen::Vector2d(1.0, -0.5).asDiagonal().toDenseMatrix()),
               Error);
}

TEST(RigidityOperator, UmbilicFixture) {
  for (int level : {2, 3}) {
    const RigidityOperator op = rigidity_operator(genus2_mesh(level), -0.7);
    EXPECT_NEAR(op.tan_abs_s, std::tan(0.7), 1e-15);
    EXPECT_NEAR(op.tau_min, -std::tan(0.7), 1e-8);
    EXPECT_NEAR(op.tau_max, -std::tan(0.7), 1e-8);
    EXPECT_LT(op.anisotropy, 1e-6);
    EXPECT_LT(op.constant_residual, 1e-6);
    EXPECT_EQ(op.kernel_dimension, 0);
    EXPECT_GE(op.smallest_magnitude, 1.8);
    EXPECT_LE(op.smallest_magnitude, 2.0 + 1e-8);
  }
}

TEST(RigidityOperator, EigenvaluesAreShiftedLaplacian) {
  const Genus2Mesh mesh = genus2_mesh(2);
  const RigidityOperator op = rigidity_operator(mesh, -0.4);
  const DiscreteOperators plain = discrete_operators(mesh);
  EigenOptions opt;
  opt.shift = -1.0;
  const EigenResult lap = smallest_eigenpairs(plain.stiffness, plain.mass, opt);
  // (Delta - 2) eigenvalues are -(lambda + 2) for -Delta eigenvalues lambda.
  EXPECT_NEAR(op.shifted_laplacian[0], -2.0, 1e-8);
  EXPECT_NEAR(std::abs(op.shifted_laplacian[1]), lap.values[1] + 2.0, 1e-6);
}

TEST(RigidityOperator, SpectralGapStableUnderRefinement) {
  const double coarse = rigidity_operator(genus2_mesh(2), -0.7).shifted_laplacian[1];
  const double fine = rigidity_operator(genus2_mesh(3), -0.7).shifted_laplacian[1];
  EXPECT_LT(std::abs(fine - coarse) / std::abs(fine), 0.1);
}

TEST(RigidityOperator, ParameterRange) {
  const Genus2Mesh mesh = genus2_mesh(1);
  EXPECT_THROW(rigidity_operator(mesh, 0.0), Error);
  EXPECT_THROW(rigidity_operator(mesh, -std::numbers::pi / 2.0), Error);
}

TEST(RandomConvexPair, Deterministic) {
  const ConvexPair a = random_convex_pair(5, 17), b = random_convex_pair(5, 17);
  EXPECT_EQ(a.metric, b.metric);
  EXPECT_EQ(a.shape, b.shape);
  EXPECT_EQ(a.bdot, b.bdot);
  const auto k = principal_curvatures(a.shape);
  EXPECT_GT(k[0], 0.0);
  EXPECT_LT(self_adjoint_residual(a.bdot, a.metric), 1e-12);
}
