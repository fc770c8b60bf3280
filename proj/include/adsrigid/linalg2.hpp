#pragma once

// Small fixed-size helpers for tensors on a surface chart.

#include <Eigen/Dense>
#include <array>

namespace adsrigid {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Rotation by +pi/2 for the metric `metric`, positively oriented w.r.t. the chart.
Mat2 complex_structure(const Mat2& metric);

/// Pull-back metric(A., A.) as a matrix: A^T metric A.
inline Mat2 pullback(const Mat2& metric, const Mat2& a) { return a.transpose() * metric * a; }

/// Eigenvalues (ascending) of an operator that is self-adjoint for some metric.
/// Only trace and determinant are used; a negative discriminant from rounding
/// is clamped to zero.
std::array<double, 2> real_eigenvalues(const Mat2& op);

/// Relative asymmetry of metric*op, i.e. how far op is from being self-adjoint.
double self_adjoint_residual(const Mat2& op, const Mat2& metric);

/// Spectral condition number of a symmetric positive-definite 2x2 matrix
/// (infinity if not positive definite).
double spd_condition(const Mat2& m);

/// Norm of a tangent vector for a metric.
inline double metric_norm(const Vec2& v, const Mat2& metric) {
  const double q = v.dot(metric * v);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

inline Mat2 symmetrized(const Mat2& m) { return 0.5 * (m + m.transpose()); }

}  // namespace adsrigid
