#include "adsrigid/mess_metrics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "adsrigid/error.hpp"
#include "adsrigid/kernels.hpp"

namespace adsrigid {

namespace {

double matrix_condition(const Mat2& a) {
  Eigen::JacobiSVD<Mat2> svd(a);
  const auto& s = svd.singularValues();
  return s[1] > 0.0 ? s[0] / s[1] : std::numeric_limits<double>::infinity();
}

Mat2 transfer_operator(const Mat2& metric, const Mat2& shape, MessSign sign) {
  const Mat2 jb = complex_structure(metric) * shape;
  const Mat2 a = sign == MessSign::Plus ? Mat2(Mat2::Identity() + jb) : Mat2(Mat2::Identity() - jb);
  const double cond = matrix_condition(a);
  if (!(cond <= kMaxSharpCondition)) {
    std::ostringstream msg;
    msg << "E " << (sign == MessSign::Plus ? '+' : '-') << " JB is singular (condition " << cond
        << ")";
    throw Error(ErrorKind::Degenerate, msg.str());
  }
  return a;
}

EndomorphismField transfer_field(const SurfaceField& field) {
  return [&field](const Vec2& x) {
    const SurfaceSample s = field(x);
    return transfer_operator(s.metric, s.shape, MessSign::Plus);
  };
}

Christoffel conjugated(const Christoffel& conn, const Mat2& a, const std::array<Mat2, 2>& da) {
  const Mat2 a_inv = a.inverse();
  Christoffel out;
  for (int i = 0; i < 2; ++i) out.gamma[i] = a_inv * (da[i] + conn.gamma[i] * a);
  return out;
}

}  // namespace

Mat2 mess_metric(const Mat2& metric, const Mat2& shape, MessSign sign) {
  return symmetrized(pullback(metric, transfer_operator(metric, shape, sign)));
}

Mat2 sharp_complex_structure(const Mat2& metric, const Mat2& shape) {
  const Mat2 a = transfer_operator(metric, shape, MessSign::Plus);
  return a.inverse() * complex_structure(metric) * a;
}

Christoffel sharp_connection(const SurfaceField& field, const Vec2& u, const FdScheme& scheme) {
  const MetricField metric = [&field](const Vec2& x) { return field(x).metric; };
  const EndomorphismField a = transfer_field(field);
  const std::array<Mat2, 2> da{fd::first(a, u, 0, scheme.field_step, scheme.richardson),
                               fd::first(a, u, 1, scheme.field_step, scheme.richardson)};
  return conjugated(christoffel(metric, u, scheme), a(u), da);
}

SharpData sharp_frame(const SurfaceField& field, const Vec2& u, const FdScheme& scheme,
                      double codazzi_tol) {
  const SurfaceSample s = field(u);
  const MetricField metric = [&field](const Vec2& x) { return field(x).metric; };
  const EndomorphismField a_field = transfer_field(field);
  const Christoffel conn = christoffel(metric, u, scheme);

  SharpData out;
  out.transfer = transfer_operator(s.metric, s.shape, MessSign::Plus);
  out.transfer_codazzi = metric_norm(
      exterior_derivative(a_field, conn, u, scheme.field_step, scheme.richardson), s.metric);
  if (!(out.transfer_codazzi <= codazzi_tol)) {
    std::ostringstream msg;
    msg << "d^D(E + JB) = " << out.transfer_codazzi << " exceeds " << codazzi_tol
        << "; the connection transfer does not apply";
    throw Error(ErrorKind::Precondition, msg.str());
  }

  const std::array<Mat2, 2> da{fd::first(a_field, u, 0, scheme.field_step, scheme.richardson),
                               fd::first(a_field, u, 1, scheme.field_step, scheme.richardson)};
  out.connection = conjugated(conn, out.transfer, da);
  const Mat2 a_inv = out.transfer.inverse();
  out.complex = a_inv * complex_structure(s.metric) * out.transfer;
  out.metric = symmetrized(pullback(s.metric, out.transfer));
  out.curvature = gaussian_curvature(metric, u, scheme) / out.transfer.determinant();
  out.area_element = std::sqrt(out.metric.determinant());
  return out;
}

double sharp_curvature_from_connection(const SurfaceField& field, const Vec2& u,
                                       const FdScheme& scheme) {
  // Symbols at neighbouring points are differenced with a step larger than
  // the one used inside them.
  const double h = 2.0 * scheme.field_step;
  auto gamma_i = [&](int i) {
    return [&, i](const Vec2& x) { return Mat2(sharp_connection(field, x, scheme).gamma[i]); };
  };
  const Christoffel c = sharp_connection(field, u, scheme);
  const Mat2 d1_g2 = fd::first(gamma_i(1), u, 0, h, scheme.richardson);
  const Mat2 d2_g1 = fd::first(gamma_i(0), u, 1, h, scheme.richardson);
  // R(d1, d2) = d1 G2 - d2 G1 + G1 G2 - G2 G1 acting on components.
  const Mat2 r12 = d1_g2 - d2_g1 + c.gamma[0] * c.gamma[1] - c.gamma[1] * c.gamma[0];
  const SurfaceSample s = field(u);
  const Mat2 g = symmetrized(pullback(s.metric, transfer_operator(s.metric, s.shape, MessSign::Plus)));
  const Vec2 e1 = Vec2::UnitX(), e2 = Vec2::UnitY();
  return (r12 * e2).dot(g * e1) / g.determinant();
}

double left_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const EmbeddingData d = embedding_data_at(f, u, scheme);
  const Mat2 a = transfer_operator(d.metric, d.shape, MessSign::Plus);
  return jet_curvature(f, u, scheme) / a.determinant();
}

CheckReport verify_left_metric_hyperbolic(const Immersion& f, const std::vector<Vec2>& samples,
                                          const FdScheme& scheme, double tolerance) {
  const auto values = kernels::left_curvature_sweep(f, samples, scheme, kernels::Exec::Parallel);
  CheckReport report;
  for (std::size_t i = 0; i < samples.size(); ++i)
    report.add("left_curvature_plus_one", kernels::location(samples[i]), values[i], tolerance);
  return report;
}

}  // namespace adsrigid
