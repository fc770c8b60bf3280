#include "adsrigid/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <random>

#include "adsrigid/mess_metrics.hpp"
#include "adsrigid/report.hpp"
#include "adsrigid/rigidity.hpp"

namespace adsrigid::kernels {

std::vector<Vec2> sample_points(const ChartBox& box, std::size_t n, std::uint64_t seed,
                                double margin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> x(box.lo.x() + margin, box.hi.x() - margin);
  std::uniform_real_distribution<double> y(box.lo.y() + margin, box.hi.y() - margin);
  std::vector<Vec2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = x(rng);
    const double b = y(rng);
    out.emplace_back(a, b);
  }
  return out;
}

std::string location(const Vec2& u) {
  return "(" + format_number(u.x()) + " " + format_number(u.y()) + ")";
}

std::string location(const Eigen::Vector3d& x) {
  return "(" + format_number(x[0]) + " " + format_number(x[1]) + " " + format_number(x[2]) + ")";
}

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

std::vector<StructureResiduals> gauss_codazzi_sweep(const Immersion& f,
                                                    const std::vector<Vec2>& points,
                                                    const FdScheme& scheme, Exec exec) {
  return sweep<StructureResiduals>(
      points.size(), [&](std::size_t i) { return structure_residuals(f, points[i], scheme); },
      exec);
}

std::vector<double> left_curvature_sweep(const Immersion& f, const std::vector<Vec2>& points,
                                         const FdScheme& scheme, Exec exec) {
  return sweep<double>(
      points.size(), [&](std::size_t i) { return std::abs(left_curvature(f, points[i], scheme) + 1.0); },
      exec);
}

namespace {

struct PairResult {
  double tr_b = 0.0, tr_jbb = 0.0, tr_ab = 0.0, tr_ainv_b = 0.0, cayley_hamilton = 0.0;
  bool mismatch = false;
};

}  // namespace

LinearChainStats linear_chain_sweep(std::size_t pairs, std::uint64_t seed, Exec exec) {
  const auto results = sweep<PairResult>(
      pairs,
      [&](std::size_t i) {
        PairResult r;
        const ConvexPair p = random_convex_pair(seed, i, true);
        const TraceConditions t = trace_conditions(p.metric, p.shape, p.bdot);
        r.tr_b = std::abs(t.tr_b);
        r.tr_jbb = std::abs(t.tr_jbb);
        r.tr_ab = std::abs(t.tr_ab);
        r.tr_ainv_b = std::abs(t.tr_ainv_b);
        r.cayley_hamilton = t.cayley_hamilton;
        // The same pair without the linearized Gauss projection must violate
        // both formulations together.
        const ConvexPair q = random_convex_pair(seed, i, false);
        const TraceConditions u = trace_conditions(q.metric, q.shape, q.bdot);
        r.mismatch = !t.equivalent() || !u.equivalent();
        return r;
      },
      exec);
  LinearChainStats s;
  s.pairs = pairs;
  for (const auto& r : results) {
    s.max_tr_b = std::max(s.max_tr_b, r.tr_b);
    s.max_tr_jbb = std::max(s.max_tr_jbb, r.tr_jbb);
    s.max_tr_ab = std::max(s.max_tr_ab, r.tr_ab);
    s.max_tr_ainv_b = std::max(s.max_tr_ainv_b, r.tr_ainv_b);
    s.max_cayley_hamilton = std::max(s.max_cayley_hamilton, r.cayley_hamilton);
    if (r.mismatch) ++s.equivalence_mismatches;
  }
  return s;
}

}  // namespace adsrigid::kernels
