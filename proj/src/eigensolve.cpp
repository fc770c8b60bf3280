#include "adsrigid/eigensolve.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "adsrigid/error.hpp"

namespace adsrigid {

namespace {

EigenResult sorted_by_magnitude(const Eigen::VectorXd& values, const Eigen::MatrixXd& vectors,
                                int count) {
  std::vector<int> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return std::abs(values[i]) < std::abs(values[j]); });
  const int k = std::min<int>(count, static_cast<int>(values.size()));
  EigenResult out;
  out.values.resize(k);
  out.vectors.resize(vectors.rows(), k);
  for (int i = 0; i < k; ++i) {
    out.values[i] = values[order[i]];
    out.vectors.col(i) = vectors.col(order[i]);
  }
  return out;
}

EigenResult dense_solve(const Eigen::SparseMatrix<double>& a, const Eigen::SparseMatrix<double>& m,
                        int count) {
  const Eigen::MatrixXd ad = Eigen::MatrixXd(a);
  const Eigen::MatrixXd md = Eigen::MatrixXd(m);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(ad, md);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::Degenerate, "dense eigensolve failed");
  EigenResult out = sorted_by_magnitude(es.eigenvalues(), es.eigenvectors(), count);
  out.dense = true;
  return out;
}

// M-orthonormalize the columns of x (Cholesky of the Gram matrix, with a QR
// pass first to keep the Gram matrix well conditioned).
Eigen::MatrixXd m_orthonormal(const Eigen::MatrixXd& x, const Eigen::SparseMatrix<double>& m) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(x.rows(), x.cols());
  const Eigen::MatrixXd gram = q.transpose() * (m * q);
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw Error(ErrorKind::Degenerate, "subspace collapsed");
  return llt.matrixU().solve<Eigen::OnTheRight>(q);
}

EigenResult shift_invert(const Eigen::SparseMatrix<double>& a, const Eigen::SparseMatrix<double>& m,
                         const EigenOptions& opt) {
  const Eigen::Index n = a.rows();
  const int block = std::min<int>(2 * opt.count + 2, static_cast<int>(n));
  Eigen::SparseMatrix<double> shifted = a - opt.shift * m;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(shifted);
  if (ldlt.info() != Eigen::Success)
    throw Error(ErrorKind::Degenerate, "factorization of the shifted operator failed");

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd x(n, block);
  for (Eigen::Index j = 0; j < block; ++j)
    for (Eigen::Index i = 0; i < n; ++i) x(i, j) = normal(rng);
  x = m_orthonormal(x, m);

  const double a_norm = a.norm(), m_norm = m.norm();
  EigenResult out;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    Eigen::MatrixXd y = ldlt.solve(Eigen::MatrixXd(m * x));
    y = m_orthonormal(y, m);
    // Rayleigh-Ritz for the original pencil.
    const Eigen::MatrixXd ar = y.transpose() * (a * y);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (ar + ar.transpose()));
    x = y * es.eigenvectors();
    out = sorted_by_magnitude(es.eigenvalues(), x, block);
    out.iterations = it;
    // Converged when every wanted pair has a small relative residual.
    double worst = 0.0;
    for (int i = 0; i < opt.count && i < block; ++i) {
      const Eigen::VectorXd ax = a * out.vectors.col(i);
      const Eigen::VectorXd mx = m * out.vectors.col(i);
      const double scale =
          (a_norm + std::abs(out.values[i]) * m_norm) * out.vectors.col(i).norm() + 1e-300;
      worst = std::max(worst, (ax - out.values[i] * mx).norm() / scale);
    }
    if (worst <= opt.tolerance) break;
  }
  const int k = std::min<int>(opt.count, block);
  out.values.conservativeResize(k);
  out.vectors.conservativeResize(Eigen::NoChange, k);
  return out;
}

}  // namespace

EigenResult smallest_eigenpairs(const Eigen::SparseMatrix<double>& a,
                                const Eigen::SparseMatrix<double>& m, const EigenOptions& options) {
  if (a.rows() != a.cols() || m.rows() != m.cols() || a.rows() != m.rows())
    throw Error(ErrorKind::Precondition, "eigenproblem dimensions disagree");
  if (options.count < 1) throw Error(ErrorKind::Precondition, "eigenpair count must be positive");
  if (a.rows() <= options.dense_limit) return dense_solve(a, m, options.count);
  return shift_invert(a, m, options);
}

int kernel_dimension(const Eigen::VectorXd& values, double ratio, double floor) {
  if (values.size() == 0) return 0;
  std::vector<double> mags(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) mags[i] = std::abs(values[i]);
  std::sort(mags.begin(), mags.end());
  const double clamp = std::max(floor * mags.back(), 1e-300);
  for (double& v : mags) v = std::max(v, clamp);
  for (std::size_t i = 0; i + 1 < mags.size(); ++i)
    if (mags[i + 1] >= ratio * mags[i]) return static_cast<int>(i + 1);
  return 0;
}

}  // namespace adsrigid
