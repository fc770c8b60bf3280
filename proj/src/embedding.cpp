#include "adsrigid/embedding.hpp"

#include <cmath>
#include <sstream>

#include "adsrigid/error.hpp"

namespace adsrigid {

const char* to_string(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::StronglyPastConvex: return "strongly-past-convex";
    case ConvexityClass::StronglyFutureConvex: return "strongly-future-convex";
    case ConvexityClass::NotStronglyConvex: return "not-strongly-convex";
  }
  return "?";
}

Eigen::Vector3d hyperboloid_chart(const Vec2& u) {
  return {u.x(), u.y(), std::sqrt(1.0 + u.squaredNorm())};
}

Mat2 hyperbolic_metric(const Vec2& u) {
  const double w = 1.0 + u.squaredNorm();
  return Mat2::Identity() - u * u.transpose() / w;
}

namespace {

// Covector annihilating the three rows, raised with the (2,2) form: a vector
// <.,.>-orthogonal to a, b and c.
AmbientVector orthogonal_complement(const AmbientVector& a, const AmbientVector& b,
                                    const AmbientVector& c) {
  Eigen::Matrix<double, 3, 4> rows;
  rows.row(0) = a.coords.transpose();
  rows.row(1) = b.coords.transpose();
  rows.row(2) = c.coords.transpose();
  Eigen::Vector4d w;
  for (int col = 0; col < 4; ++col) {
    Eigen::Matrix3d minor;
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == col) continue;
      minor.col(k++) = rows.col(j);
    }
    w[col] = ((col % 2 == 0) ? 1.0 : -1.0) * minor.determinant();
  }
  return {w[0], w[1], -w[2], -w[3]};
}

Mat2 gram(const AmbientVector& f1, const AmbientVector& f2) {
  Mat2 g;
  g(0, 0) = bilinear22(f1, f1);
  g(0, 1) = g(1, 0) = bilinear22(f1, f2);
  g(1, 1) = bilinear22(f2, f2);
  return g;
}

void require_spacelike(const Mat2& metric, const Vec2& u) {
  const double cond = spd_condition(metric);
  if (!(cond <= kMaxMetricCondition)) {
    std::ostringstream msg;
    msg << "induced form at (" << u.x() << ", " << u.y()
        << ") is not spacelike or is ill-conditioned (condition " << cond << ")";
    throw Error(ErrorKind::Degenerate, msg.str());
  }
}

struct FirstJet {
  AmbientVector point, d1, d2;
};

FirstJet first_jet(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  return {f(u), fd::first(f, u, 0, scheme.step, scheme.richardson),
          fd::first(f, u, 1, scheme.step, scheme.richardson)};
}

MetricField induced_metric_field(const Immersion& f, const FdScheme& scheme) {
  return [f, scheme](const Vec2& u) {
    const FirstJet jet = first_jet(f, u, scheme);
    return gram(jet.d1, jet.d2);
  };
}

AmbientVector normal_from_jet(const FirstJet& jet) {
  AmbientVector n = orthogonal_complement(jet.point, jet.d1, jet.d2);
  const double q = bilinear22(n, n);
  const double scale = jet.d1.coords.norm() * jet.d2.coords.norm() * jet.point.coords.norm();
  if (!(q < -1e-14 * scale * scale)) {
    throw Error(ErrorKind::Degenerate, "normal direction is not timelike (rank-deficient dF)");
  }
  n /= std::sqrt(-q);
  if (!future_directed(jet.point, n)) n = -n;
  return n;
}

}  // namespace

AmbientVector future_normal(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const FirstJet jet = first_jet(f, u, scheme);
  require_spacelike(gram(jet.d1, jet.d2), u);
  return normal_from_jet(jet);
}

EmbeddingData embedding_data_at(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const FirstJet jet = first_jet(f, u, scheme);
  EmbeddingData d;
  d.point = jet.point;
  d.metric = gram(jet.d1, jet.d2);
  require_spacelike(d.metric, u);
  const AmbientVector n = normal_from_jet(jet);
  d.normal = n;

  // II_ij = <n, F_ij> = -<d_i n, F_j>.
  const double h2 = scheme.field_step;
  const int r = scheme.richardson;
  Mat2 second;
  second(0, 0) = bilinear22(n, fd::second(f, u, 0, 0, h2, r));
  second(1, 1) = bilinear22(n, fd::second(f, u, 1, 1, h2, r));
  second(0, 1) = second(1, 0) = bilinear22(n, fd::second(f, u, 0, 1, h2, r));

  d.shape = d.metric.inverse() * second;
  d.complex = complex_structure(d.metric);
  return d;
}

SurfaceField surface_field(const Immersion& f, const FdScheme& scheme) {
  return [f, scheme](const Vec2& u) {
    const EmbeddingData d = embedding_data_at(f, u, scheme);
    return SurfaceSample{d.metric, d.shape};
  };
}

Christoffel christoffel(const MetricField& metric, const Vec2& u, const FdScheme& scheme) {
  const Mat2 g_inv = metric(u).inverse();
  const std::array<Mat2, 2> dg{fd::first(metric, u, 0, scheme.field_step, scheme.richardson),
                               fd::first(metric, u, 1, scheme.field_step, scheme.richardson)};
  Christoffel c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      // lowered(l) = Gamma_{l i j}
      Vec2 lowered;
      for (int l = 0; l < 2; ++l) lowered[l] = 0.5 * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
      c.gamma[i].col(j) = g_inv * lowered;
    }
  return c;
}

double gaussian_curvature(const MetricField& metric, const Vec2& u, const FdScheme& scheme) {
  const double h = scheme.field_step;
  const int r = scheme.richardson;
  const Mat2 g = metric(u);
  const Mat2 gu = fd::first(metric, u, 0, h, r);
  const Mat2 gv = fd::first(metric, u, 1, h, r);
  const Mat2 guu = fd::second(metric, u, 0, 0, h, r);
  const Mat2 guv = fd::second(metric, u, 0, 1, h, r);
  const Mat2 gvv = fd::second(metric, u, 1, 1, h, r);

  const double e = g(0, 0), f = g(0, 1), gg = g(1, 1);
  const double e_u = gu(0, 0), f_u = gu(0, 1), g_u = gu(1, 1);
  const double e_v = gv(0, 0), f_v = gv(0, 1), g_v = gv(1, 1);

  Eigen::Matrix3d m1;
  m1 << -0.5 * gvv(0, 0) + guv(0, 1) - 0.5 * guu(1, 1), 0.5 * e_u, f_u - 0.5 * e_v,
      f_v - 0.5 * g_u, e, f,  //
      0.5 * g_v, f, gg;
  Eigen::Matrix3d m2;
  m2 << 0.0, 0.5 * e_v, 0.5 * g_u,  //
      0.5 * e_v, e, f,              //
      0.5 * g_u, f, gg;
  const double det = e * gg - f * f;
  return (m1.determinant() - m2.determinant()) / (det * det);
}

double gaussian_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const MetricField metric = induced_metric_field(f, scheme);
  require_spacelike(metric(u), u);
  return gaussian_curvature(metric, u, scheme);
}

double jet_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const FirstJet jet = first_jet(f, u, scheme);
  const Mat2 g = gram(jet.d1, jet.d2);
  require_spacelike(g, u);
  const double h = scheme.field_step;
  const int r = scheme.richardson;
  const AmbientVector f11 = fd::second(f, u, 0, 0, h, r);
  const AmbientVector f12 = fd::second(f, u, 0, 1, h, r);
  const AmbientVector f22 = fd::second(f, u, 1, 1, h, r);
  const AmbientVector &f1 = jet.d1, &f2 = jet.d2;

  const double e = g(0, 0), ff = g(0, 1), gg = g(1, 1);
  const double e_u = 2.0 * bilinear22(f11, f1), e_v = 2.0 * bilinear22(f12, f1);
  const double g_u = 2.0 * bilinear22(f12, f2), g_v = 2.0 * bilinear22(f22, f2);
  const double f_u = bilinear22(f11, f2) + bilinear22(f1, f12);
  const double f_v = bilinear22(f12, f2) + bilinear22(f1, f22);
  const double top = bilinear22(f11, f22) - bilinear22(f12, f12);

  Eigen::Matrix3d m1;
  m1 << top, 0.5 * e_u, f_u - 0.5 * e_v,  //
      f_v - 0.5 * g_u, e, ff,             //
      0.5 * g_v, ff, gg;
  Eigen::Matrix3d m2;
  m2 << 0.0, 0.5 * e_v, 0.5 * g_u,  //
      0.5 * e_v, e, ff,             //
      0.5 * g_u, ff, gg;
  const double det = e * gg - ff * ff;
  return (m1.determinant() - m2.determinant()) / (det * det);
}

Vec2 exterior_derivative(const EndomorphismField& a, const Christoffel& conn, const Vec2& u,
                         double step, int richardson) {
  const Mat2 a0 = a(u);
  const Mat2 d1 = fd::first(a, u, 0, step, richardson);
  const Mat2 d2 = fd::first(a, u, 1, step, richardson);
  return d1.col(1) - d2.col(0) + conn.gamma[0] * a0.col(1) - conn.gamma[1] * a0.col(0);
}

namespace {

StructureResiduals residuals_from(const MetricField& metric, const EndomorphismField& shape,
                                  const Vec2& u, const FdScheme& scheme) {
  const Mat2 g = metric(u);
  require_spacelike(g, u);
  StructureResiduals res;
  res.gauss = gaussian_curvature(metric, u, scheme) + 1.0 + shape(u).determinant();
  const Christoffel conn = christoffel(metric, u, scheme);
  res.codazzi =
      metric_norm(exterior_derivative(shape, conn, u, scheme.field_step, scheme.richardson), g);
  return res;
}

}  // namespace

StructureResiduals structure_residuals(const SurfaceField& field, const Vec2& u,
                                       const FdScheme& scheme) {
  const MetricField metric = [&field](const Vec2& x) { return field(x).metric; };
  const EndomorphismField shape = [&field](const Vec2& x) { return field(x).shape; };
  return residuals_from(metric, shape, u, scheme);
}

StructureResiduals structure_residuals(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const MetricField metric = induced_metric_field(f, scheme);
  const EndomorphismField shape = [&f, &scheme](const Vec2& x) {
    return embedding_data_at(f, x, scheme).shape;
  };
  return residuals_from(metric, shape, u, scheme);
}

Mat2 third_fundamental_form(const Mat2& metric, const Mat2& shape) {
  return symmetrized(pullback(metric, shape));
}

std::array<double, 2> principal_curvatures(const Mat2& shape) { return real_eigenvalues(shape); }

ConvexityClass convexity_class(const Mat2& shape, double tol) {
  const auto k = principal_curvatures(shape);
  if (k[0] > tol) return ConvexityClass::StronglyPastConvex;
  if (k[1] < -tol) return ConvexityClass::StronglyFutureConvex;
  return ConvexityClass::NotStronglyConvex;
}

}  // namespace adsrigid
