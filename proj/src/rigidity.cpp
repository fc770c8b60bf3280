#include "adsrigid/rigidity.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "adsrigid/constructions.hpp"
#include "adsrigid/error.hpp"
#include "adsrigid/kernels.hpp"

namespace adsrigid {

namespace {

Mat2 checked_transfer(const Mat2& metric, const Mat2& shape) {
  const Mat2 a = Mat2::Identity() + complex_structure(metric) * shape;
  Eigen::JacobiSVD<Mat2> svd(a);
  const auto& sv = svd.singularValues();
  if (!(sv[1] > 0.0 && sv[0] / sv[1] <= kMaxSharpCondition))
    throw Error(ErrorKind::Degenerate, "E + JB is singular");
  return a;
}

}  // namespace

BMorphism b_from_Bdot(const Mat2& metric, const Mat2& shape, const Mat2& bdot) {
  const Mat2 a = checked_transfer(metric, shape);
  BMorphism out;
  out.b = a.inverse() * complex_structure(metric) * bdot;
  const Mat2 sharp = mess_metric(metric, shape, MessSign::Plus);
  out.sharp_variation = out.b.transpose() * sharp + sharp * out.b;
  return out;
}

TraceConditions trace_conditions(const Mat2& metric, const Mat2& shape, const Mat2& bdot,
                                 double tol) {
  const double det_b = shape.determinant();
  if (!(det_b > kMinShapeDeterminant)) {
    std::ostringstream msg;
    msg << "trace conditions need det B > 0 (got " << det_b << ")";
    throw Error(ErrorKind::Precondition, msg.str());
  }
  const Mat2 jb = complex_structure(metric) * shape;
  const Mat2 jb_inv = jb.inverse();
  const Mat2 b = b_from_Bdot(metric, shape, bdot).b;
  const double k = -1.0 - det_b;

  TraceConditions t;
  t.tr_b = b.trace();
  t.tr_jbb = (jb * b).trace();
  t.tr_binv_bdot = (shape.inverse() * bdot).trace();
  t.tr_ab = ((Mat2::Identity() + jb) * b).trace();
  t.tr_ainv_b = ((Mat2::Identity() + jb_inv) * b).trace();
  t.cayley_hamilton = (jb - (1.0 + k) * jb_inv).cwiseAbs().maxCoeff();
  t.first_pair = std::abs(t.tr_b) <= tol && std::abs(t.tr_jbb) <= tol;
  t.second_pair = std::abs(t.tr_ab) <= tol && std::abs(t.tr_ainv_b) <= tol;
  return t;
}

Mat2 sharp_hessian(const SurfaceField& field, const ScalarField& mu, const Vec2& u,
                   const FdScheme& scheme) {
  const double h = scheme.field_step;
  const int r = scheme.richardson;
  const Christoffel c = sharp_connection(field, u, scheme);
  const Vec2 dmu(fd::first(mu, u, 0, h, r), fd::first(mu, u, 1, h, r));
  Mat2 hess;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      hess(i, j) = fd::second(mu, u, i, j, h, r) - c.gamma[i].col(j).dot(dmu);
  const SurfaceSample s = field(u);
  return mess_metric(s.metric, s.shape, MessSign::Plus).inverse() * symmetrized(hess);
}

BMorphism b_from_mu(const SurfaceField& field, const ScalarField& mu, const Vec2& u,
                    const FdScheme& scheme) {
  const SurfaceSample s = field(u);
  const Mat2 j_sharp = sharp_complex_structure(s.metric, s.shape);
  const Mat2 i_sharp = mess_metric(s.metric, s.shape, MessSign::Plus);
  const Vec2 dmu(fd::first(mu, u, 0, scheme.field_step, scheme.richardson),
                 fd::first(mu, u, 1, scheme.field_step, scheme.richardson));
  BMorphism out;
  out.b = j_sharp * (-sharp_hessian(field, mu, u, scheme) + mu(u) * Mat2::Identity());
  out.v = -j_sharp * i_sharp.inverse() * dmu;
  out.sharp_variation = out.b.transpose() * i_sharp + i_sharp * out.b;
  return out;
}

double sharp_codazzi_residual(const SurfaceField& field, const EndomorphismField& b,
                              const Vec2& u, const FdScheme& scheme) {
  const Christoffel c = sharp_connection(field, u, scheme);
  const Vec2 d = exterior_derivative(b, c, u, scheme.field_step, scheme.richardson);
  const SurfaceSample s = field(u);
  return metric_norm(d, mess_metric(s.metric, s.shape, MessSign::Plus));
}

JbjSharp jbj_sharp(const Mat2& metric, const Mat2& shape, double tol) {
  const auto k = principal_curvatures(shape);
  if (!(k[0] > tol)) {
    std::ostringstream msg;
    msg << "JBJ# needs a strongly past-convex point (k1 = " << k[0] << ")";
    throw Error(ErrorKind::Precondition, msg.str());
  }
  const Mat2 j = complex_structure(metric);
  const Mat2 a = checked_transfer(metric, shape);
  JbjSharp out;
  out.op = a.inverse() * j * shape * j * a;
  out.eigenvalues = real_eigenvalues(out.op);
  out.expected = {-k[1], -k[0]};
  out.eigen_error = std::max(std::abs(out.eigenvalues[0] - out.expected[0]),
                             std::abs(out.eigenvalues[1] - out.expected[1]));
  out.self_adjoint = self_adjoint_residual(out.op, mess_metric(metric, shape, MessSign::Plus));
  return out;
}

namespace {

struct TriangleCoefficient {
  double tau = 0.0;
  double anisotropy = 0.0;
  double k_min = 0.0, k_max = 0.0;
};

}  // namespace

RigidityOperator rigidity_operator(const Genus2Mesh& mesh, double s,
                                   const RigidityOptions& options) {
  if (!(s > -std::numbers::pi / 2.0 && s < 0.0))
    throw Error(ErrorKind::Precondition, "rigidity operator needs s in (-pi/2, 0)");
  const Immersion f = fuchsian_family(s);
  const auto elements = triangle_elements(mesh);

  const auto coeffs = kernels::sweep<TriangleCoefficient>(
      elements.size(),
      [&](std::size_t t) {
        const Eigen::Vector3d& c = elements[t].centroid;
        const EmbeddingData d = embedding_data_at(f, Vec2(c[0], c[1]), options.scheme);
        const JbjSharp op = jbj_sharp(d.metric, d.shape);
        TriangleCoefficient out;
        out.tau = 0.5 * op.op.trace();
        out.anisotropy = (op.op - out.tau * Mat2::Identity()).cwiseAbs().maxCoeff();
        out.k_min = -op.eigenvalues[1];
        out.k_max = -op.eigenvalues[0];
        return out;
      },
      kernels::Exec::Parallel);

  RigidityOperator out;
  out.level = mesh.level;
  out.s = s;
  out.tan_abs_s = std::tan(std::abs(s));
  out.tau_min = out.k_min = std::numeric_limits<double>::infinity();
  out.tau_max = out.k_max = -std::numeric_limits<double>::infinity();

  std::vector<Eigen::Triplet<double>> ws, ms;
  ws.reserve(elements.size() * 9);
  ms.reserve(elements.size() * 9);
  for (std::size_t t = 0; t < elements.size(); ++t) {
    const auto& el = elements[t];
    const auto& c = coeffs[t];
    out.tau_min = std::min(out.tau_min, c.tau);
    out.tau_max = std::max(out.tau_max, c.tau);
    out.k_min = std::min(out.k_min, c.k_min);
    out.k_max = std::max(out.k_max, c.k_max);
    out.anisotropy = std::max(out.anisotropy, c.anisotropy);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        ws.emplace_back(el.nodes[i], el.nodes[j],
                        c.tau * (el.stiffness(i, j) + 2.0 * el.mass(i, j)));
        ms.emplace_back(el.nodes[i], el.nodes[j], el.mass(i, j));
      }
  }
  if (out.anisotropy > options.isotropy_tol) {
    std::ostringstream msg;
    msg << "JBJ# is not isotropic on the mesh (anisotropy " << out.anisotropy
        << "); the discrete operator assumes umbilic data";
    throw Error(ErrorKind::Precondition, msg.str());
  }
  const int n = mesh.glued_vertex_count;
  out.weak.resize(n, n);
  out.mass.resize(n, n);
  out.weak.setFromTriplets(ws.begin(), ws.end());
  out.mass.setFromTriplets(ms.begin(), ms.end());

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const Eigen::VectorXd target = -2.0 * out.tan_abs_s * (out.mass * ones);
  out.constant_residual = (out.weak * ones - target).norm() / target.norm();

  EigenOptions eo;
  eo.count = options.eigen_count;
  eo.seed = options.seed;
  const EigenResult er = smallest_eigenpairs(out.weak, out.mass, eo);
  out.dense = er.dense;
  out.eigenvalues = er.values;
  out.shifted_laplacian = er.values / out.tan_abs_s;
  out.smallest_magnitude = out.shifted_laplacian.cwiseAbs().minCoeff();
  out.kernel_dimension = kernel_dimension(out.shifted_laplacian);
  return out;
}

double first_laplace_eigenvalue(const Genus2Mesh& mesh, std::uint64_t seed) {
  const DiscreteOperators ops = discrete_operators(mesh);
  EigenOptions eo;
  eo.count = 2;
  eo.seed = seed;
  eo.shift = -1.0;  // the stiffness matrix itself is singular
  const EigenResult er = smallest_eigenpairs(ops.stiffness, ops.mass, eo);
  return std::max(er.values[0], er.values[1]);
}

ConvexPair random_convex_pair(std::uint64_t seed, std::uint64_t index, bool project) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> metric_ev(0.5, 2.0);
  std::uniform_real_distribution<double> shape_ev(0.2, 3.0);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);

  auto rotation = [](double t) {
    Mat2 r;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return r;
  };
  auto spd = [&](std::uniform_real_distribution<double>& ev) {
    const Mat2 r = rotation(angle(rng));
    const double l0 = ev(rng);
    const double l1 = ev(rng);
    return Mat2(r * Eigen::Vector2d(l0, l1).asDiagonal() * r.transpose());
  };

  ConvexPair p;
  p.metric = spd(metric_ev);
  const Mat2 s = spd(shape_ev);
  Mat2 t;
  t(0, 0) = entry(rng);
  t(1, 1) = entry(rng);
  t(0, 1) = t(1, 0) = entry(rng);
  if (project) t -= 0.5 * (s.inverse() * t).trace() * s;
  const Mat2 i_inv = p.metric.inverse();
  p.shape = i_inv * s;
  p.bdot = i_inv * t;
  return p;
}

}  // namespace adsrigid
