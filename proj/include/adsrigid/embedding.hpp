#pragma once

// Embedding data (I, B, J, n) of spacelike surfaces in AdS^3 and the Gauss and
// Codazzi residuals, computed by finite differences from an immersion or from
// tensor fields supplied directly.

#include <array>
#include <functional>
#include <string>

#include "adsrigid/ads_core.hpp"
#include "adsrigid/fd.hpp"
#include "adsrigid/linalg2.hpp"

namespace adsrigid {

struct ChartBox {
  Vec2 lo{-1.0, -1.0};
  Vec2 hi{1.0, 1.0};

  bool contains(const Vec2& u, double margin = 0.0) const {
    return u.x() >= lo.x() + margin && u.x() <= hi.x() - margin && u.y() >= lo.y() + margin &&
           u.y() <= hi.y() - margin;
  }
};

/// A smooth map from a chart box into the quadric.
struct Immersion {
  std::string name;
  std::function<AmbientVector(const Vec2&)> map;
  ChartBox box;

  AmbientVector operator()(const Vec2& u) const { return map(u); }
};

/// First fundamental form I, shape operator B (as a (1,1)-tensor in the
/// coordinate frame), complex structure J of I and the future unit normal n.
struct EmbeddingData {
  AmbientVector point;
  AmbientVector normal;
  Mat2 metric = Mat2::Identity();
  Mat2 shape = Mat2::Zero();
  Mat2 complex = Mat2::Zero();
};

/// The pair (I, B) at one chart point.
struct SurfaceSample {
  Mat2 metric = Mat2::Identity();
  Mat2 shape = Mat2::Zero();
};

/// Embedding data supplied abstractly as fields over a chart.
using SurfaceField = std::function<SurfaceSample(const Vec2&)>;
using MetricField = std::function<Mat2(const Vec2&)>;
using EndomorphismField = std::function<Mat2(const Vec2&)>;

enum class ConvexityClass { StronglyPastConvex, StronglyFutureConvex, NotStronglyConvex };
const char* to_string(ConvexityClass c);

/// Condition number of I above which computations refuse to proceed.
inline constexpr double kMaxMetricCondition = 1e6;

/// Christoffel symbols: gamma[i](k, m) = Gamma^k_{i m}, so that
/// D_{d_i} X = dX/du_i + gamma[i] * X in coordinates.
struct Christoffel {
  std::array<Mat2, 2> gamma{Mat2::Zero(), Mat2::Zero()};
};

struct StructureResiduals {
  double gauss = 0.0;    // K + 1 + det B
  double codazzi = 0.0;  // |(d^D B)(d1, d2)|_I
};

/// Hyperboloid chart of the hyperbolic plane: u -> (u1, u2, sqrt(1 + |u|^2)).
Eigen::Vector3d hyperboloid_chart(const Vec2& u);
/// Pull-back of the hyperbolic metric by hyperboloid_chart.
Mat2 hyperbolic_metric(const Vec2& u);

/// Embedding data at u. Throws Degenerate if the induced form is not
/// spacelike, is ill-conditioned, or dF has deficient rank.
EmbeddingData embedding_data_at(const Immersion& f, const Vec2& u, const FdScheme& scheme = {});

/// Future unit normal at u (first derivatives only).
AmbientVector future_normal(const Immersion& f, const Vec2& u, const FdScheme& scheme = {});

/// (I, B) field of an immersion.
SurfaceField surface_field(const Immersion& f, const FdScheme& scheme = {});

Christoffel christoffel(const MetricField& metric, const Vec2& u, const FdScheme& scheme = {});

/// Gaussian curvature of a metric field from its first and second
/// derivatives (Brioschi formula).
double gaussian_curvature(const MetricField& metric, const Vec2& u, const FdScheme& scheme = {});
double gaussian_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme = {});

/// Same Brioschi formula, with the metric derivatives expanded through the
/// ambient jets of the map (d_k g_ij = <F_ik, F_j> + <F_i, F_jk>, and the
/// second-order part equal to <F_11, F_22> - <F_12, F_12>). Needs only second
/// derivatives of f; exact in the flat coordinates of R^{2,2}.
double jet_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme = {});

/// (d^D A)(d1, d2) = D_1(A d2) - D_2(A d1) for an endomorphism field A and the
/// connection D whose symbols at u are `conn`.
Vec2 exterior_derivative(const EndomorphismField& a, const Christoffel& conn, const Vec2& u,
                         double step, int richardson);

StructureResiduals structure_residuals(const SurfaceField& field, const Vec2& u,
                                       const FdScheme& scheme = {});
StructureResiduals structure_residuals(const Immersion& f, const Vec2& u,
                                       const FdScheme& scheme = {});

/// III(u, v) = I(Bu, Bv).
Mat2 third_fundamental_form(const Mat2& metric, const Mat2& shape);
inline Mat2 third_fundamental_form(const EmbeddingData& d) {
  return third_fundamental_form(d.metric, d.shape);
}

/// Principal curvatures k1 <= k2 (eigenvalues of B).
std::array<double, 2> principal_curvatures(const Mat2& shape);

ConvexityClass convexity_class(const Mat2& shape, double tol = 1e-10);
inline ConvexityClass convexity_class(const EmbeddingData& d, double tol = 1e-10) {
  return convexity_class(d.shape, tol);
}

}  // namespace adsrigid
