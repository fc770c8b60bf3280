#include "adsrigid/constructions.hpp"

#include <cmath>
#include <sstream>

#include "adsrigid/error.hpp"
#include "adsrigid/mess_metrics.hpp"

namespace adsrigid {

namespace {

constexpr double kPi = std::numbers::pi;

AmbientVector lifted(const Vec2& u, double phi) {
  const Eigen::Vector3d y = hyperboloid_chart(u);
  const double c = std::cos(phi);
  return {c * y[0], c * y[1], c * y[2], -std::sin(phi)};
}

void require_parameter(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Config, what);
}

}  // namespace

Immersion totally_geodesic() {
  Immersion f = fuchsian_family(0.0);
  f.name = "totally_geodesic";
  return f;
}

Immersion fuchsian_family(double s) {
  if (!(s > -kPi / 2.0 && s <= 0.0))
    throw Error(ErrorKind::Precondition, "fuchsian_family needs s in (-pi/2, 0]");
  return {"fuchsian_family", [s](const Vec2& u) { return lifted(u, s); }, ChartBox{}};
}

Immersion graph_bump(double amplitude, double width, double base) {
  if (!(width > 0.0)) throw Error(ErrorKind::Precondition, "graph_bump width must be positive");
  return {"graph_bump",
          [=](const Vec2& u) {
            return lifted(u, base + amplitude * std::exp(-u.squaredNorm() / (width * width)));
          },
          ChartBox{}};
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"totally_geodesic", "fuchsian_family", "graph_bump"};
  return names;
}

Immersion make_fixture(const FixtureParams& p) {
  if (p.name == "totally_geodesic") return totally_geodesic();
  if (p.name == "fuchsian_family") {
    require_parameter(p.s > -kPi / 2.0 && p.s <= 0.0, "fixture parameter s must lie in (-pi/2, 0]");
    return fuchsian_family(p.s);
  }
  if (p.name == "graph_bump") {
    require_parameter(p.width > 0.0, "fixture parameter width must be positive");
    require_parameter(std::abs(p.amplitude) < 0.5, "fixture parameter amplitude must be below 0.5");
    return graph_bump(p.amplitude, p.width);
  }
  throw Error(ErrorKind::Config, "unknown fixture '" + p.name + "'");
}

DualData dual_surface(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const EmbeddingData d = embedding_data_at(f, u, scheme);
  const double det_b = d.shape.determinant();
  if (!(det_b > kMinDualDeterminant)) {
    std::ostringstream msg;
    msg << "duality needs a strongly convex point, det B = " << det_b;
    throw Error(ErrorKind::Precondition, msg.str());
  }
  DualData out;
  out.point = d.normal;
  out.data.point = d.normal;
  out.data.normal = -d.point;
  out.data.metric = third_fundamental_form(d);
  out.data.shape = -d.shape.inverse();
  out.data.complex = complex_structure(out.data.metric);
  out.curvature = dual_curvature_formula(-1.0 - det_b);
  return out;
}

Immersion dual_immersion(const Immersion& f, const FdScheme& scheme) {
  Immersion dual;
  dual.name = f.name + "*";
  dual.box = f.box;
  dual.map = [f, scheme](const Vec2& u) { return future_normal(f, u, scheme); };
  return dual;
}

double third_form_curvature(const Immersion& f, const Vec2& u, const FdScheme& scheme) {
  const MetricField third = [&](const Vec2& x) {
    return third_fundamental_form(embedding_data_at(f, x, scheme));
  };
  return gaussian_curvature(third, u, scheme);
}

SurfaceSample equidistant_data(const Mat2& metric, const Mat2& shape, double s) {
  if (!(s > -kPi / 2.0 && s <= 0.0))
    throw Error(ErrorKind::Precondition, "equidistant distance must lie in (-pi/2, 0]");
  const Mat2 a = equidistant_transfer(shape, s);
  const double det = a.determinant();
  if (!(std::abs(det) > 1e-12 * std::max(1.0, a.squaredNorm())))
    throw Error(ErrorKind::Degenerate, "focal point: cos s E + sin s B is singular");
  SurfaceSample out;
  out.metric = symmetrized(pullback(metric, a));
  out.shape = a.inverse() * (std::cos(s) * shape - std::sin(s) * Mat2::Identity());
  return out;
}

Immersion equidistant_immersion(const Immersion& f, double s, const FdScheme& scheme) {
  Immersion out;
  out.name = f.name + "@equidistant";
  out.box = f.box;
  out.map = [f, s, scheme](const Vec2& u) {
    return AmbientVector(std::cos(s) * f(u).coords - std::sin(s) * future_normal(f, u, scheme).coords);
  };
  return out;
}

ExtensionMetric extension_metric(const SurfaceField& field) {
  ExtensionMetric ext;
  ext.eval = [field](const Eigen::Vector3d& x) {
    const SurfaceSample base = field(Vec2(x[0], x[1]));
    const SurfaceSample eq = equidistant_data(base.metric, base.shape, x[2]);
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    h.topLeftCorner<2, 2>() = eq.metric;
    h(2, 2) = -1.0;
    return h;
  };
  return ext;
}

ExtensionMetric frozen_metric(const SurfaceField& field) {
  ExtensionMetric ext;
  ext.eval = [field](const Eigen::Vector3d& x) {
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    h.topLeftCorner<2, 2>() = field(Vec2(x[0], x[1])).metric;
    h(2, 2) = -1.0;
    return h;
  };
  return ext;
}

Riemann3 riemann_tensor(const std::function<Eigen::Matrix3d(const Eigen::Vector3d&)>& h,
                        const Eigen::Vector3d& x, double step, int richardson) {
  const Eigen::Matrix3d g = h(x);
  const Eigen::Matrix3d g_inv = g.inverse();
  std::array<Eigen::Matrix3d, 3> dg;
  for (int a = 0; a < 3; ++a) dg[a] = fd::first(h, x, a, step, richardson);
  std::array<std::array<Eigen::Matrix3d, 3>, 3> ddg;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) ddg[a][b] = ddg[b][a] = fd::second(h, x, a, b, step, richardson);

  // gamma[e](b, c) = Gamma^e_bc
  std::array<Eigen::Matrix3d, 3> gamma;
  for (auto& m : gamma) m.setZero();
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c)
      for (int e = 0; e < 3; ++e)
        for (int f = 0; f < 3; ++f)
          gamma[e](b, c) += 0.5 * g_inv(e, f) * (dg[b](f, c) + dg[c](f, b) - dg[f](b, c));

  Riemann3 r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double v = 0.5 * (ddg[b][c](a, d) + ddg[a][d](b, c) - ddg[b][d](a, c) - ddg[a][c](b, d));
          for (int e = 0; e < 3; ++e)
            for (int f = 0; f < 3; ++f)
              v += g(e, f) * (gamma[e](b, c) * gamma[f](a, d) - gamma[e](b, d) * gamma[f](a, c));
          r.component[a][b][c][d] = v;
        }
  return r;
}

double extension_curvature(const ExtensionMetric& ext, const Eigen::Vector3d& x,
                           const FdScheme& scheme) {
  const double h = scheme.field_step;
  if (!(x[2] - h > ext.s_min && x[2] + h <= ext.s_max)) {
    std::ostringstream msg;
    msg << "difference stencil at s = " << x[2] << " leaves the range (" << ext.s_min << ", "
        << ext.s_max << "]";
    throw Error(ErrorKind::Precondition, msg.str());
  }
  const Riemann3 r = riemann_tensor(ext.eval, x, h, scheme.richardson);
  const Eigen::Matrix3d g = ext.eval(x);
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  double worst = 0.0;
  for (int p = 0; p < 3; ++p)
    for (int q = p; q < 3; ++q) {
      const int a = kPairs[p][0], b = kPairs[p][1], c = kPairs[q][0], d = kPairs[q][1];
      const double model = g(a, c) * g(b, d) - g(a, d) * g(b, c);
      worst = std::max(worst, std::abs(r.component[a][b][c][d] + model));
    }
  return worst / g.squaredNorm();
}

double fuchsian_parameter_for_curvature(double k) {
  if (!(k < -1.0)) throw Error(ErrorKind::Precondition, "curvature must be below -1");
  return -std::acos(1.0 / std::sqrt(-k));
}

PhiK phi_K_fuchsian(double k, const Vec2& u, const FdScheme& scheme) {
  PhiK out;
  out.s = fuchsian_parameter_for_curvature(k);
  const EmbeddingData d = embedding_data_at(fuchsian_family(out.s), u, scheme);
  out.left = mess_metric(d, MessSign::Plus);
  out.normalized = std::abs(k) * d.metric;
  return out;
}

}  // namespace adsrigid
