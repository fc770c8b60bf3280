#pragma once

// Linearized rigidity: the morphism b = (E + JB)^{-1} J Bdot, its trace
// identities, the b = J#(-Hess# mu + mu E) representation, the operator
// JBJ#, and the discrete elliptic operator mu -> tr(JBJ#(-Hess# mu + mu E))
// on the genus-2 surface.

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>

#include "adsrigid/eigensolve.hpp"
#include "adsrigid/embedding.hpp"
#include "adsrigid/fuchsian.hpp"
#include "adsrigid/mess_metrics.hpp"

namespace adsrigid {

using ScalarField = std::function<double(const Vec2&)>;

struct BMorphism {
  Mat2 b = Mat2::Zero();
  Mat2 sharp_variation = Mat2::Zero();  // I#_+(b., .) + I#_+(., b.)
  Vec2 v = Vec2::Zero();                // set when built from mu: v = -J# D# mu
};

/// b = (E + JB)^{-1} J Bdot. Throws Degenerate for singular E + JB.
BMorphism b_from_Bdot(const Mat2& metric, const Mat2& shape, const Mat2& bdot);

struct TraceConditions {
  double tr_b = 0.0;           // tr b
  double tr_jbb = 0.0;         // tr(JB b)
  double tr_binv_bdot = 0.0;   // tr(B^{-1} Bdot), linearized Gauss
  double tr_ab = 0.0;          // tr((E + JB) b)
  double tr_ainv_b = 0.0;      // tr((E + (JB)^{-1}) b)
  double cayley_hamilton = 0.0;  // max |JB - (1 + K)(JB)^{-1}|, K = -1 - det B
  bool first_pair = false;     // tr b = 0 and tr(JB b) = 0
  bool second_pair = false;    // tr((E + JB) b) = 0 and tr((E + (JB)^{-1}) b) = 0
  bool equivalent() const { return first_pair == second_pair; }
};

inline constexpr double kMinShapeDeterminant = 1e-10;

/// Throws Precondition when det B <= kMinShapeDeterminant.
TraceConditions trace_conditions(const Mat2& metric, const Mat2& shape, const Mat2& bdot,
                                 double tol = 1e-9);

/// Hess# mu as a (1,1)-tensor for I#_+, symmetrized.
Mat2 sharp_hessian(const SurfaceField& field, const ScalarField& mu, const Vec2& u,
                   const FdScheme& scheme = {});

/// b = J#(-Hess# mu + mu E) with v = -J# D# mu attached.
BMorphism b_from_mu(const SurfaceField& field, const ScalarField& mu, const Vec2& u,
                    const FdScheme& scheme = {});

/// |D#_1(b d2) - D#_2(b d1)|_{I#} at u.
double sharp_codazzi_residual(const SurfaceField& field, const EndomorphismField& b,
                              const Vec2& u, const FdScheme& scheme = {});

struct JbjSharp {
  Mat2 op;                          // (E + JB)^{-1} JBJ (E + JB)
  std::array<double, 2> eigenvalues;  // ascending
  std::array<double, 2> expected;     // {-k2, -k1}
  double eigen_error = 0.0;
  double self_adjoint = 0.0;          // w.r.t. I#_+
};

/// Throws Precondition unless both principal curvatures exceed `tol`.
JbjSharp jbj_sharp(const Mat2& metric, const Mat2& shape, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Discrete operator on the genus-2 surface, umbilic Fuchsian data.

struct RigidityOptions {
  int eigen_count = 6;
  std::uint64_t seed = 0x5eed;
  FdScheme scheme{};
  double isotropy_tol = 1e-6;
};

struct RigidityOperator {
  int level = 0;
  double s = 0.0;
  double tan_abs_s = 0.0;
  SparseMatrix weak;  // sum_t tau_t (S_t + 2 M_t), tau_t = mean eigenvalue of JBJ#
  SparseMatrix mass;
  double tau_min = 0.0, tau_max = 0.0;
  double anisotropy = 0.0;  // max |JBJ# - tau E| over triangle centroids
  double k_min = 0.0, k_max = 0.0;  // principal curvature range
  Eigen::VectorXd eigenvalues;      // of the weak operator against the mass
  Eigen::VectorXd shifted_laplacian;  // eigenvalues / tan|s|, those of (Delta - 2)
  double smallest_magnitude = 0.0;  // of (Delta - 2)
  int kernel_dimension = 0;
  double constant_residual = 0.0;  // |weak 1 + 2 tan|s| M 1| / |2 tan|s| M 1|
  bool dense = false;
};

/// Throws Precondition for s outside (-pi/2, 0).
RigidityOperator rigidity_operator(const Genus2Mesh& mesh, double s,
                                   const RigidityOptions& options = {});

/// Smallest nonzero eigenvalue of the plain Laplacian (-Delta) on the mesh.
double first_laplace_eigenvalue(const Genus2Mesh& mesh, std::uint64_t seed = 0x5eed);

// ---------------------------------------------------------------------------
// Random strongly convex data for the pointwise identities.

struct ConvexPair {
  Mat2 metric;
  Mat2 shape;
  Mat2 bdot;  // I-self-adjoint; tr(B^{-1} Bdot) = 0 when projected
};

/// Deterministic in (seed, index).
ConvexPair random_convex_pair(std::uint64_t seed, std::uint64_t index, bool project = true);

}  // namespace adsrigid
