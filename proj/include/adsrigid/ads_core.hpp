#pragma once

// Ambient model of AdS^3: the quadric {<x,x> = -1} in R^{2,2}, its geodesics,
// the SL(2,R) matrix model and the action of SL(2,R) x SL(2,R).

#include <Eigen/Dense>

namespace adsrigid {

/// A point or vector of R^{2,2}.
struct AmbientVector {
  Eigen::Vector4d coords = Eigen::Vector4d::Zero();

  AmbientVector() = default;
  explicit AmbientVector(const Eigen::Vector4d& c) : coords(c) {}
  AmbientVector(double x1, double x2, double x3, double x4) : coords(x1, x2, x3, x4) {}

  double operator[](int i) const { return coords[i]; }
  double& operator[](int i) { return coords[i]; }

  AmbientVector& operator+=(const AmbientVector& o) { coords += o.coords; return *this; }
  AmbientVector& operator-=(const AmbientVector& o) { coords -= o.coords; return *this; }
  AmbientVector& operator*=(double a) { coords *= a; return *this; }
  AmbientVector& operator/=(double a) { coords /= a; return *this; }

  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
  friend AmbientVector operator-(AmbientVector a) { a.coords = -a.coords; return a; }
  friend AmbientVector operator*(double s, AmbientVector a) { return a *= s; }
  friend AmbientVector operator*(AmbientVector a, double s) { return a *= s; }
  friend AmbientVector operator/(AmbientVector a, double s) { return a /= s; }
};

enum class TangentClass { Spacelike, Timelike, Lightlike };

const char* to_string(TangentClass c);

/// Default tolerances for the ambient model.
struct AdsTolerances {
  double quadric = 1e-10;  // |<x,x> + 1|
  double form = 1e-12;     // form preservation, tangency dead band
  double unimodular = 1e-10;
};

/// x1 y1 + x2 y2 - x3 y3 - x4 y4.
double bilinear22(const AmbientVector& x, const AmbientVector& y);

bool on_quadric(const AmbientVector& x, double tol = AdsTolerances{}.quadric);
bool is_null(const AmbientVector& x, double tol = AdsTolerances{}.form);

/// Causal type of a tangent vector v at a quadric point p. The sign of <v,v>
/// decides, with a dead band of width `tol` classified as lightlike.
TangentClass classify_tangent(const AmbientVector& p, const AmbientVector& v,
                              double tol = AdsTolerances{}.quadric);

/// Point at parameter t on the geodesic from p with initial velocity v.
/// v must be unit spacelike, unit timelike, or null.
AmbientVector geodesic_point(const AmbientVector& p, const AmbientVector& v, double t,
                             double tol = AdsTolerances{}.quadric);

/// M(x) = [[x3+x1, x2+x4], [x2-x4, x3-x1]], so det M(x) = -<x,x>.
Eigen::Matrix2d to_matrix_model(const AmbientVector& x);
AmbientVector from_matrix_model(const Eigen::Matrix2d& m);

/// (A, B) in SL(2,R) x SL(2,R), acting by M -> A M B^{-1}.
struct IsometryPair {
  Eigen::Matrix2d left = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d right = Eigen::Matrix2d::Identity();

  static IsometryPair identity() { return {}; }
  /// (this * other) . x == this . (other . x)
  IsometryPair compose(const IsometryPair& other) const {
    return {left * other.left, right * other.right};
  }
  IsometryPair inverse() const { return {left.inverse(), right.inverse()}; }
};

AmbientVector apply_isometry(const IsometryPair& g, const AmbientVector& x,
                             double tol = AdsTolerances{}.unimodular);

/// Unit timelike Killing field defining the time orientation; at (0,0,1,0) it
/// equals e4, the velocity of s -> (0,0,cos s, sin s) at s = 0.
AmbientVector time_orientation(const AmbientVector& p);

/// True for timelike v at p lying in the same cone as time_orientation(p).
bool future_directed(const AmbientVector& p, const AmbientVector& v);

}  // namespace adsrigid
