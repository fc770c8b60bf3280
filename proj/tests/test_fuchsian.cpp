#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "adsrigid/error.hpp"
#include "adsrigid/fuchsian.hpp"
#include "adsrigid/rigidity.hpp"
#include "oracles.hpp"

using namespace adsrigid;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d octagon_vertex(int j) {
  const double r = std::acosh(1.0 / std::pow(std::tan(kPi / 8.0), 2));
  const double t = j * kPi / 4.0;
  return {std::sinh(r) * std::cos(t), std::sinh(r) * std::sin(t), std::cosh(r)};
}

}  // namespace

TEST(Octagon, Geometry) {
  const OctagonGeometry g = regular_octagon();
  // Right triangle centre / side midpoint / vertex with angles pi/8 and pi/8.
  EXPECT_NEAR(std::cosh(g.circumradius), 1.0 / std::pow(std::tan(kPi / 8.0), 2), 1e-12);
  EXPECT_NEAR(std::cosh(g.side_length / 2.0), std::cos(kPi / 8.0) / std::sin(kPi / 8.0), 1e-12);
  // Gauss-Bonnet: 6 pi minus the angle sum 2 pi.
  EXPECT_NEAR(8.0 * hyperbolic_triangle_area({0, 0, 1}, octagon_vertex(0), octagon_vertex(1)),
              4.0 * kPi, 1e-10);
}

TEST(Octagon, GeneratorsAreHyperbolic) {
  const HolonomySet h = octagon_generators();
  const double trace = 2.0 * std::cosh(regular_octagon().inradius);
  for (const Mat2& g : h.generators) {
    EXPECT_NEAR(g.determinant(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(g.trace()), trace, 1e-12);
    EXPECT_GT(std::abs(g.trace()), 2.0);
  }
}

TEST(Octagon, SidePairing) {
  const HolonomySet h = octagon_generators();
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector3d a = act_on_hyperboloid(h.generators[k], octagon_vertex(k + 4));
    const Eigen::Vector3d b = act_on_hyperboloid(h.generators[k], octagon_vertex(k + 5));
    EXPECT_LT((a - octagon_vertex(k + 1)).norm(), 1e-10) << k;
    EXPECT_LT((b - octagon_vertex(k)).norm(), 1e-10) << k;
  }
}

TEST(Octagon, RelatorIsIdentity) {
  const HolonomySet h = octagon_generators();
  EXPECT_LT(h.relator_residual(), 1e-8);
  const Mat2 a1 = h.a1(), b1 = h.b1(), a2 = h.a2(), b2 = h.b2();
  const Mat2 word = a1 * b2 * a2.inverse() * b1 * a1.inverse() * b2.inverse() * a2 * b1.inverse();
  EXPECT_LT(std::min((word - Mat2::Identity()).cwiseAbs().maxCoeff(),
                     (word + Mat2::Identity()).cwiseAbs().maxCoeff()),
            1e-8);
}

TEST(Octagon, ActionIsIsometry) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    const Mat2 a = oracle::random_unimodular(rng);
    const Eigen::Vector3d p = octagon_vertex(i), q = octagon_vertex(i + 3);
    EXPECT_NEAR(hyperbolic_distance(act_on_hyperboloid(a, p), act_on_hyperboloid(a, q)),
                hyperbolic_distance(p, q), 1e-9);
    const IsometryPair g = fuchsian_isometry(a);
    const Eigen::Vector3d y = act_on_hyperboloid(a, p);
    const AmbientVector x = apply_isometry(g, AmbientVector{p.x(), p.y(), p.z(), 0.0});
    EXPECT_LT((x.coords - Eigen::Vector4d(y.x(), y.y(), y.z(), 0.0)).norm(), 1e-9 * y.norm());
  }
}

TEST(Octagon, DistanceOracle) {
  const Eigen::Vector3d o{0, 0, 1};
  for (double r : {0.1, 1.0, 3.0}) {
    const Eigen::Vector3d p{std::sinh(r), 0.0, std::cosh(r)};
    EXPECT_NEAR(hyperbolic_distance(o, p), r, 1e-12);
  }
}

class MeshLevels : public ::testing::TestWithParam<int> {};

TEST_P(MeshLevels, Combinatorics) {
  const int k = GetParam();
  const Genus2Mesh mesh = genus2_mesh(k);
  const int p = 1 << (2 * k);
  EXPECT_EQ(static_cast<int>(mesh.triangles.size()), 8 * p);
  EXPECT_EQ(mesh.glued_vertex_count, 4 * p - 2);
  EXPECT_EQ(mesh.glued_edge_count(), 12 * p);
  EXPECT_EQ(mesh.euler_characteristic(), -2);
  EXPECT_EQ(static_cast<int>(mesh.gluings.size()), 4 * (1 << k));
}

TEST_P(MeshLevels, AreaIsFourPi) {
  const Genus2Mesh mesh = genus2_mesh(GetParam());
  double sum = 0.0;
  for (const auto& t : mesh.triangles)
    sum += hyperbolic_triangle_area(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
  EXPECT_NEAR(sum, 4.0 * kPi, 1e-9);
  EXPECT_NEAR(mesh.hyperbolic_area(), 4.0 * kPi, 1e-9);
}

TEST_P(MeshLevels, GluingIsInvolution) {
  const Genus2Mesh mesh = genus2_mesh(GetParam());
  std::set<int> seen;
  for (const auto& [a, b] : mesh.gluings) {
    EXPECT_LT(a, b);
    EXPECT_EQ(mesh.partner(a), b);
    EXPECT_EQ(mesh.partner(b), a);
    EXPECT_TRUE(seen.insert(a).second);
    EXPECT_TRUE(seen.insert(b).second);
  }
  int boundary = 0;
  for (int e = 0; e < 3 * static_cast<int>(mesh.triangles.size()); ++e) boundary += mesh.partner(e) >= 0;
  EXPECT_EQ(boundary, 2 * static_cast<int>(mesh.gluings.size()));
}

TEST_P(MeshLevels, GluedEdgesHaveEqualLength) {
  const Genus2Mesh mesh = genus2_mesh(GetParam());
  auto length = [&](int e) {
    const auto& t = mesh.triangles[e / 3];
    return hyperbolic_distance(mesh.vertices[t[e % 3]], mesh.vertices[t[(e % 3 + 1) % 3]]);
  };
  for (const auto& [a, b] : mesh.gluings) EXPECT_NEAR(length(a), length(b), 1e-10);
}

TEST_P(MeshLevels, ConstantsAreHarmonic) {
  const Genus2Mesh mesh = genus2_mesh(GetParam());
  for (double scale : {1.0, 0.3}) {
    const DiscreteOperators ops = discrete_operators(mesh, scale);
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(ops.size());
    EXPECT_LT((ops.stiffness * one).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(one.dot(ops.mass * one), 4.0 * kPi * scale, 1e-9);
    EXPECT_EQ(ops.size(), mesh.glued_vertex_count);
  }
}

INSTANTIATE_TEST_SUITE_P(Levels, MeshLevels, ::testing::Values(0, 1, 2, 3));

TEST(Mesh, LevelLimit) {
  EXPECT_THROW(genus2_mesh(3, 2), Error);
  EXPECT_THROW(genus2_mesh(-1), Error);
}

TEST(Mesh, ExportRoundTrip) {
  const Genus2Mesh mesh = genus2_mesh(2);
  std::stringstream ss;
  write_mesh(ss, mesh);
  const Genus2Mesh back = read_mesh(ss);
  ASSERT_EQ(back.vertices.size(), mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    EXPECT_EQ(back.vertices[i], mesh.vertices[i]);
  EXPECT_EQ(back.triangles, mesh.triangles);
  EXPECT_EQ(back.gluings, mesh.gluings);
  EXPECT_EQ(back.vertex_class, mesh.vertex_class);
  EXPECT_EQ(back.euler_characteristic(), -2);
  std::stringstream again;
  write_mesh(again, back);
  std::stringstream first;
  write_mesh(first, mesh);
  EXPECT_EQ(again.str(), first.str());
}

TEST(Mesh, ReadRejectsGarbage) {
  std::stringstream ss("vertices 2\n0 0 1\n");
  EXPECT_THROW(read_mesh(ss), Error);
}

TEST(Mesh, DegenerateTriangleRejected) {
  Genus2Mesh mesh = genus2_mesh(0);
  mesh.triangles[0][1] = mesh.triangles[0][0];
  try {
    triangle_elements(mesh);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(Mesh, ElementsMatchHyperbolicLengths) {
  const Genus2Mesh mesh = genus2_mesh(1);
  for (const TriangleElement& t : triangle_elements(mesh)) {
    EXPECT_GT(t.euclidean_area, 0.0);
    EXPECT_NEAR(t.mass.sum(), t.hyperbolic_area, 1e-14);
    EXPECT_LT((t.stiffness * Eigen::Vector3d::Ones()).norm(), 1e-12);
    EXPECT_NEAR(bilinear21(t.centroid, t.centroid), -1.0, 1e-12);
  }
}

TEST(Spectrum, BolzaFirstEigenvalue) {
  const double lambda = first_laplace_eigenvalue(genus2_mesh(4));
  EXPECT_NEAR(lambda, oracle::kBolzaFirstEigenvalue, 0.01 * oracle::kBolzaFirstEigenvalue);
}
