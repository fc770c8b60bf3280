#pragma once

// Surfaces and spacetimes built from embedding data: the fixture catalog, the
// dual surface, equidistant surfaces and the Lorentzian metric they sweep out,
// and the curvature-K normalization on the Fuchsian family.

#include <Eigen/Dense>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "adsrigid/embedding.hpp"

namespace adsrigid {

/// The plane {x4 = 0} over the hyperboloid chart.
Immersion totally_geodesic();

/// F_s(u) = (cos s * y(u), -sin s), y the hyperboloid chart. For s < 0 the
/// future normal is (sin s * y, cos s) and B = tan|s| E (strongly past-convex);
/// I = cos^2 s * g and K = -1/cos^2 s. Equivariant under fuchsian_isometry.
Immersion fuchsian_family(double s);

/// Same construction with a variable parameter phi(u) = base + amplitude *
/// exp(-|u|^2 / width^2). Non-umbilic, nonconstant K.
Immersion graph_bump(double amplitude = 0.1, double width = 0.8,
                     double base = -std::numbers::pi / 4.0);

struct FixtureParams {
  std::string name = "fuchsian_family";
  double s = -0.7;
  double amplitude = 0.1;
  double width = 0.8;
};

/// Catalog lookup. Throws Config for an unknown name or out-of-range parameter.
Immersion make_fixture(const FixtureParams& params);
const std::vector<std::string>& fixture_names();

// ---------------------------------------------------------------------------
// Duality

/// The dual surface u -> n(u). Its future normal is -F, so its shape operator
/// is -B^{-1} and its induced metric is III.
struct DualData {
  AmbientVector point;       // n
  EmbeddingData data;        // (III, -B^{-1}, J of III, -F)
  double curvature = 0.0;    // -K/(1+K) with K = -1 - det B
};

inline constexpr double kMinDualDeterminant = 1e-8;

/// Throws Precondition when det B <= kMinDualDeterminant.
DualData dual_surface(const Immersion& f, const Vec2& u, const FdScheme& scheme = {});
inline double dual_curvature_formula(double k) { return -k / (1.0 + k); }

/// u -> n(u) as an immersion in its own right.
Immersion dual_immersion(const Immersion& f, const FdScheme& scheme = {});

/// Curvature of the metric field III, by the Brioschi formula.
double third_form_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme = {});

// ---------------------------------------------------------------------------
// Equidistant surfaces

/// A_s = cos s E + sin s B.
inline Mat2 equidistant_transfer(const Mat2& shape, double s) {
  return std::cos(s) * Mat2::Identity() + std::sin(s) * shape;
}

/// (I_s, B_s) of the surface at distance |s| to the future (s <= 0):
/// I_s = I(A_s., A_s.), B_s = A_s^{-1}(cos s B - sin s E).
/// Throws Degenerate at a focal point (A_s singular) and Precondition for s
/// outside (-pi/2, 0].
SurfaceSample equidistant_data(const Mat2& metric, const Mat2& shape, double s);

/// u -> cos s F(u) - sin s n(u).
Immersion equidistant_immersion(const Immersion& f, double s, const FdScheme& scheme = {});

// ---------------------------------------------------------------------------
// Extension metric on (u1, u2, s)

struct ExtensionMetric {
  std::function<Eigen::Matrix3d(const Eigen::Vector3d&)> eval;
  double s_min = -std::numbers::pi / 2.0;
  double s_max = 0.0;
};

/// h = I_s(u) (+) (-ds^2).
ExtensionMetric extension_metric(const SurfaceField& field);
/// h = I(u) (+) (-ds^2): the surface data frozen along s. Not AdS.
ExtensionMetric frozen_metric(const SurfaceField& field);

/// Christoffel symbols and Riemann tensor of a 3-metric field, R_abcd in
/// the convention where constant curvature k reads k (h_ac h_bd - h_ad h_bc).
struct Riemann3 {
  double component[3][3][3][3];
};
Riemann3 riemann_tensor(const std::function<Eigen::Matrix3d(const Eigen::Vector3d&)>& h,
                        const Eigen::Vector3d& x, double step, int richardson);

/// Max over the 6 independent components of R_abcd + (h_ac h_bd - h_ad h_bc),
/// divided by |h|_F^2. Throws Precondition if the stencil leaves the s-range.
double extension_curvature(const ExtensionMetric& ext, const Eigen::Vector3d& x,
                           const FdScheme& scheme = {});

// ---------------------------------------------------------------------------
// Curvature-K surfaces of the Fuchsian family

/// The s < 0 with -1/cos^2 s = k. Throws Precondition for k >= -1.
double fuchsian_parameter_for_curvature(double k);

struct PhiK {
  double s = 0.0;
  Mat2 left;        // I#_+ of the curvature-k surface
  Mat2 normalized;  // |k| I_s, rescaled to curvature -1
};

PhiK phi_K_fuchsian(double k, const Vec2& u, const FdScheme& scheme = {});

}  // namespace adsrigid
