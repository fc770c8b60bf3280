#include "adsrigid/linalg2.hpp"

#include <cmath>
#include <limits>

namespace adsrigid {

Mat2 complex_structure(const Mat2& metric) {
  const double a = metric(0, 0);
  const double b = 0.5 * (metric(0, 1) + metric(1, 0));
  const double c = metric(1, 1);
  const double d = std::sqrt(a * c - b * b);
  Mat2 j;
  j << -b, -c, a, b;
  return j / d;
}

std::array<double, 2> real_eigenvalues(const Mat2& op) {
  // ((a - d)/2)^2 + bc avoids the cancellation in tr^2/4 - det near a
  // double eigenvalue.
  const double half_tr = 0.5 * op.trace();
  const double half_gap = 0.5 * (op(0, 0) - op(1, 1));
  const double disc = std::max(0.0, half_gap * half_gap + op(0, 1) * op(1, 0));
  const double r = std::sqrt(disc);
  return {half_tr - r, half_tr + r};
}

double self_adjoint_residual(const Mat2& op, const Mat2& metric) {
  const Mat2 lowered = metric * op;
  const double scale = std::max(1.0, lowered.norm());
  return (lowered - lowered.transpose()).norm() / scale;
}

double spd_condition(const Mat2& m) {
  const auto ev = real_eigenvalues(symmetrized(m));
  if (ev[0] <= 0.0) return std::numeric_limits<double>::infinity();
  return ev[1] / ev[0];
}

}  // namespace adsrigid
