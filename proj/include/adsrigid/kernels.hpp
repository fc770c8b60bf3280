#pragma once

// Sample sweeps: the data-parallel loops behind every pointwise check.
// Each kernel has a serial reference path and an OpenMP path; both write the
// result for sample i into slot i, so outputs are bitwise identical for any
// thread count.

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "adsrigid/embedding.hpp"

namespace adsrigid::kernels {

enum class Exec { Serial, Parallel };

/// Evaluates fn(i) for i in [0, n). Exceptions thrown by any sample are
/// rethrown after the loop; when several samples throw, the lowest index wins.
template <class R, class Fn>
std::vector<R> sweep(std::size_t n, Fn&& fn, Exec exec) {
  std::vector<R> out(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Seeded uniform points in the box, shrunk by `margin` on every side.
std::vector<Vec2> sample_points(const ChartBox& box, std::size_t n, std::uint64_t seed,
                                double margin = 0.1);

std::string location(const Vec2& u);
std::string location(const Eigen::Vector3d& x);

/// Thread count an OpenMP sweep would use.
int thread_count();
void set_thread_count(int n);

// Concrete kernels used by the CLI, the acceptance suite and the benchmark.

std::vector<StructureResiduals> gauss_codazzi_sweep(const Immersion& f,
                                                    const std::vector<Vec2>& points,
                                                    const FdScheme& scheme, Exec exec);

/// |K# + 1| at each point, with K# = K / det(E + JB).
std::vector<double> left_curvature_sweep(const Immersion& f, const std::vector<Vec2>& points,
                                         const FdScheme& scheme, Exec exec);

/// Residuals of the linearized rigidity chain over random strongly convex
/// 2x2 pairs (B, Bdot) with tr(B^{-1} Bdot) projected to zero.
struct LinearChainStats {
  std::size_t pairs = 0;
  double max_tr_b = 0.0;
  double max_tr_jbb = 0.0;
  double max_tr_ab = 0.0;        // tr((E + JB) b)
  double max_tr_ainv_b = 0.0;    // tr((E + (JB)^{-1}) b)
  double max_cayley_hamilton = 0.0;  // |JB - (1 + K)(JB)^{-1}|
  std::size_t equivalence_mismatches = 0;
};
LinearChainStats linear_chain_sweep(std::size_t pairs, std::uint64_t seed, Exec exec);

}  // namespace adsrigid::kernels
