#include "adsrigid/ads_core.hpp"

#include <cmath>
#include <sstream>

#include "adsrigid/error.hpp"

namespace adsrigid {

const char* to_string(TangentClass c) {
  switch (c) {
    case TangentClass::Spacelike: return "spacelike";
    case TangentClass::Timelike: return "timelike";
    case TangentClass::Lightlike: return "lightlike";
  }
  return "?";
}

double bilinear22(const AmbientVector& x, const AmbientVector& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

bool on_quadric(const AmbientVector& x, double tol) {
  return std::abs(bilinear22(x, x) + 1.0) <= tol;
}

bool is_null(const AmbientVector& x, double tol) { return std::abs(bilinear22(x, x)) <= tol; }

namespace {

void require_tangent(const AmbientVector& p, const AmbientVector& v, double tol) {
  if (!on_quadric(p, tol)) {
    std::ostringstream msg;
    msg << "point is off the quadric: <p,p> = " << bilinear22(p, p);
    throw Error(ErrorKind::Precondition, msg.str());
  }
  if (std::abs(bilinear22(p, v)) > tol) {
    std::ostringstream msg;
    msg << "vector is not tangent: <p,v> = " << bilinear22(p, v);
    throw Error(ErrorKind::Precondition, msg.str());
  }
}

}  // namespace

TangentClass classify_tangent(const AmbientVector& p, const AmbientVector& v, double tol) {
  require_tangent(p, v, tol);
  const double q = bilinear22(v, v);
  if (q > tol) return TangentClass::Spacelike;
  if (q < -tol) return TangentClass::Timelike;
  return TangentClass::Lightlike;
}

AmbientVector geodesic_point(const AmbientVector& p, const AmbientVector& v, double t,
                             double tol) {
  switch (classify_tangent(p, v, tol)) {
    case TangentClass::Spacelike:
      if (std::abs(bilinear22(v, v) - 1.0) > tol)
        throw Error(ErrorKind::Precondition, "spacelike direction is not unit");
      return std::cosh(t) * p + std::sinh(t) * v;
    case TangentClass::Timelike:
      if (std::abs(bilinear22(v, v) + 1.0) > tol)
        throw Error(ErrorKind::Precondition, "timelike direction is not unit");
      return std::cos(t) * p + std::sin(t) * v;
    case TangentClass::Lightlike:
      return p + t * v;
  }
  return p;
}

Eigen::Matrix2d to_matrix_model(const AmbientVector& x) {
  Eigen::Matrix2d m;
  m << x[2] + x[0], x[1] + x[3], x[1] - x[3], x[2] - x[0];
  return m;
}

AmbientVector from_matrix_model(const Eigen::Matrix2d& m) {
  return {0.5 * (m(0, 0) - m(1, 1)), 0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(0, 0) + m(1, 1)),
          0.5 * (m(0, 1) - m(1, 0))};
}

AmbientVector apply_isometry(const IsometryPair& g, const AmbientVector& x, double tol) {
  const double da = g.left.determinant();
  const double db = g.right.determinant();
  if (std::abs(da - 1.0) > tol || std::abs(db - 1.0) > tol) {
    std::ostringstream msg;
    msg << "isometry pair is not unimodular: det A = " << da << ", det B = " << db;
    throw Error(ErrorKind::Precondition, msg.str());
  }
  // B^{-1} for a unimodular matrix is its adjugate.
  Eigen::Matrix2d b_inv;
  b_inv << g.right(1, 1), -g.right(0, 1), -g.right(1, 0), g.right(0, 0);
  return from_matrix_model(g.left * to_matrix_model(x) * b_inv);
}

AmbientVector time_orientation(const AmbientVector& p) { return {-p[1], p[0], -p[3], p[2]}; }

bool future_directed(const AmbientVector& p, const AmbientVector& v) {
  return bilinear22(v, v) < 0.0 && bilinear22(v, time_orientation(p)) < 0.0;
}

}  // namespace adsrigid
