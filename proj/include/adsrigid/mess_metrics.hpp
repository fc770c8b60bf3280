#pragma once

// Left and right metrics I#_{+-} = I((E +- JB)., (E +- JB).) of a spacelike
// surface, and the Levi-Civita data of I#_+ obtained by conjugating the
// connection of I with A = E + JB.

#include <vector>

#include "adsrigid/embedding.hpp"
#include "adsrigid/report.hpp"

namespace adsrigid {

enum class MessSign { Plus, Minus };

/// Largest condition number of E +- JB accepted for inversion.
inline constexpr double kMaxSharpCondition = 1e8;

/// I((E +- JB)., (E +- JB).). Throws Degenerate if E +- JB is singular.
Mat2 mess_metric(const Mat2& metric, const Mat2& shape, MessSign sign);
inline Mat2 mess_metric(const EmbeddingData& d, MessSign sign) {
  return mess_metric(d.metric, d.shape, sign);
}

/// (E + JB)^{-1} J (E + JB), the complex structure of I#_+.
Mat2 sharp_complex_structure(const Mat2& metric, const Mat2& shape);

struct SharpData {
  Mat2 metric;             // I#_+
  Christoffel connection;  // D#, from D by conjugation with A
  Mat2 complex;            // J#
  double curvature = 0.0;  // K# = K / det(A)
  double area_element = 0.0;  // da#(d1, d2) = sqrt(det I#_+)
  Mat2 transfer;           // A = E + JB
  double transfer_codazzi = 0.0;  // |d^D A|_I, precondition of the transfer
};

/// D#_u v = A^{-1} D_u(A v) and K# = K/det A. Throws Precondition when
/// |d^D A| exceeds `codazzi_tol`.
SharpData sharp_frame(const SurfaceField& field, const Vec2& u, const FdScheme& scheme = {},
                      double codazzi_tol = 1e-6);

/// Symbols of D# alone (no precondition check, no curvature).
Christoffel sharp_connection(const SurfaceField& field, const Vec2& u, const FdScheme& scheme = {});

/// Curvature of I#_+ computed from the curvature tensor of D# itself, by
/// differencing its symbols. Independent of the K/det A transfer formula.
double sharp_curvature_from_connection(const SurfaceField& field, const Vec2& u,
                                       const FdScheme& scheme = {});

/// K# = K / det(E + JB) for an immersion, with K from jet_curvature.
double left_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme = {});

/// Max |K# + 1| style report over sample points, one row per sample.
CheckReport verify_left_metric_hyperbolic(const Immersion& f, const std::vector<Vec2>& samples,
                                          const FdScheme& scheme, double tolerance);

}  // namespace adsrigid
