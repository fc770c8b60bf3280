#pragma once

// Smallest-magnitude eigenpairs of a symmetric generalized problem A x = l M x
// with M positive definite.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>

namespace adsrigid {

struct EigenResult {
  Eigen::VectorXd values;   // sorted by |value|, ascending
  Eigen::MatrixXd vectors;  // M-orthonormal columns
  bool dense = false;       // which path produced the result
  int iterations = 0;
};

inline constexpr int kDenseEigenLimit = 2000;

struct EigenOptions {
  int count = 6;
  double shift = 0.0;
  int max_iterations = 500;
  double tolerance = 1e-11;
  std::uint64_t seed = 0x5eed;
  int dense_limit = kDenseEigenLimit;
};

/// Dense solve below `dense_limit` unknowns; above it, block shift-invert
/// subspace iteration around `shift` with a seeded start block.
EigenResult smallest_eigenpairs(const Eigen::SparseMatrix<double>& a,
                                const Eigen::SparseMatrix<double>& m,
                                const EigenOptions& options = {});

/// Number of leading magnitudes separated from the rest by a jump of at
/// least `ratio` (0 when no such jump exists). Magnitudes below
/// floor * max|value| are clamped to that floor first.
int kernel_dimension(const Eigen::VectorXd& values, double ratio = 10.0, double floor = 1e-12);

}  // namespace adsrigid
