#include "adsrigid/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>

#include "adsrigid/constructions.hpp"
#include "adsrigid/error.hpp"
#include "adsrigid/fuchsian.hpp"
#include "adsrigid/kernels.hpp"
#include "adsrigid/mess_metrics.hpp"
#include "adsrigid/rigidity.hpp"

namespace adsrigid::cli {

namespace {

using kernels::Exec;
using kernels::location;

constexpr double kStructureTol = 1e-6;
constexpr double kLeftCurvatureTol = 1e-6;
constexpr double kLeftCurvatureBumpTol = 1e-5;
constexpr double kSharpComplexTol = 1e-10;
constexpr double kDualCurvatureTol = 1e-6;
constexpr double kDualMetricTol = 1e-8;
constexpr double kInvolutionTol = 1e-8;
constexpr double kExtensionTol = 1e-4;
constexpr double kExtensionBumpTol = 1e-3;
constexpr double kRelatorTol = 1e-8;
constexpr double kAreaTol = 0.01;
constexpr double kSpectralFloor = 2.0 * 0.9;
constexpr double kConstantImageTol = 1e-6;
constexpr double kTraceTol = 1e-12;
constexpr double kPhiParameterTol = 1e-12;
constexpr double kPhiMetricTol = 1e-6;

bool is_bump(const RunConfig& c) { return c.fixture.name == "graph_bump"; }

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<Vec2> samples_for(const Immersion& f, const RunConfig& c) {
  return kernels::sample_points(f.box, c.samples, c.seed);
}

void echo_tolerance(CheckReport& r, const std::string& key, double tol) {
  r.set_provenance("tolerance." + key, format_number(tol));
}

CheckReport run_check(const RunConfig& c) {
  const Immersion f = make_fixture(c.fixture);
  const auto points = samples_for(f, c);
  const auto res = kernels::gauss_codazzi_sweep(f, points, c.scheme, Exec::Parallel);
  const double tol = c.tolerance.value_or(kStructureTol);
  CheckReport r;
  echo_tolerance(r, "gauss_codazzi", tol);
  for (std::size_t i = 0; i < points.size(); ++i) {
    r.add("gauss_residual", location(points[i]), std::abs(res[i].gauss), tol);
    r.add("codazzi_residual", location(points[i]), res[i].codazzi, tol);
  }
  return r;
}

CheckReport run_mess(const RunConfig& c) {
  const Immersion f = make_fixture(c.fixture);
  const auto points = samples_for(f, c);
  const SurfaceField field = surface_field(f, c.scheme);
  struct Row {
    double curvature = 0.0, complex = 0.0;
  };
  const auto rows = kernels::sweep<Row>(
      points.size(),
      [&](std::size_t i) {
        const SharpData s = sharp_frame(field, points[i], c.scheme);
        return Row{std::abs(left_curvature(f, points[i], c.scheme) + 1.0),
                   max_abs(s.complex * s.complex + Mat2::Identity())};
      },
      Exec::Parallel);
  const double tol = c.tolerance.value_or(is_bump(c) ? kLeftCurvatureBumpTol : kLeftCurvatureTol);
  CheckReport r;
  echo_tolerance(r, "left_curvature", tol);
  echo_tolerance(r, "sharp_complex", kSharpComplexTol);
  for (std::size_t i = 0; i < points.size(); ++i) {
    r.add("left_curvature_plus_one", location(points[i]), rows[i].curvature, tol);
    r.add("sharp_complex_square", location(points[i]), rows[i].complex, kSharpComplexTol);
  }
  return r;
}

CheckReport run_dual(const RunConfig& c) {
  const Immersion f = make_fixture(c.fixture);
  const auto points = samples_for(f, c);
  const Immersion dual = dual_immersion(f, c.scheme);
  struct Row {
    double curvature = 0.0, metric = 0.0, involution = 0.0;
    bool flipped = false;
  };
  const auto rows = kernels::sweep<Row>(
      points.size(),
      [&](std::size_t i) {
        const Vec2& u = points[i];
        const DualData d = dual_surface(f, u, c.scheme);
        // Both curvatures are intrinsic to the respective induced metrics.
        const double k = jet_curvature(f, u, c.scheme);
        const double k_star = jet_curvature(dual, u, c.scheme);
        const EmbeddingData dd = embedding_data_at(dual, u, c.scheme);
        const Eigen::Vector4d x = f(u).coords;
        Row row;
        row.curvature = std::abs(k_star - dual_curvature_formula(k));
        row.metric = max_abs(dd.metric - d.data.metric);
        row.involution = std::min((dd.normal.coords - x).cwiseAbs().maxCoeff(),
                                  (dd.normal.coords + x).cwiseAbs().maxCoeff());
        const auto base = convexity_class(embedding_data_at(f, u, c.scheme));
        const auto flipped = convexity_class(d.data);
        row.flipped = (base == ConvexityClass::StronglyPastConvex &&
                       flipped == ConvexityClass::StronglyFutureConvex) ||
                      (base == ConvexityClass::StronglyFutureConvex &&
                       flipped == ConvexityClass::StronglyPastConvex);
        return row;
      },
      Exec::Parallel);
  const double tol = c.tolerance.value_or(kDualCurvatureTol);
  CheckReport r;
  echo_tolerance(r, "dual_curvature", tol);
  echo_tolerance(r, "dual_metric", kDualMetricTol);
  echo_tolerance(r, "dual_involution", kInvolutionTol);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string at = location(points[i]);
    r.add("dual_curvature", at, rows[i].curvature, tol);
    r.add("dual_metric_vs_third_form", at, rows[i].metric, kDualMetricTol);
    r.add("dual_involution", at, rows[i].involution, kInvolutionTol);
    r.add("dual_convexity_flipped", at, rows[i].flipped ? 1.0 : 0.0, 1.0, Relation::Equal);
  }
  return r;
}

CheckReport run_extend(const RunConfig& c) {
  const Immersion f = make_fixture(c.fixture);
  const auto points = samples_for(f, c);
  const ExtensionMetric ext = extension_metric(surface_field(f, c.scheme));
  std::vector<Eigen::Vector3d> xs;
  for (double s : c.s_samples)
    for (const auto& u : points) xs.emplace_back(u.x(), u.y(), s);
  const auto values = kernels::sweep<double>(
      xs.size(), [&](std::size_t i) { return extension_curvature(ext, xs[i], c.scheme); },
      Exec::Parallel);
  const double tol = c.tolerance.value_or(is_bump(c) ? kExtensionBumpTol : kExtensionTol);
  CheckReport r;
  echo_tolerance(r, "extension_curvature", tol);
  for (std::size_t i = 0; i < xs.size(); ++i)
    r.add("extension_curvature", location(xs[i]), values[i], tol);
  return r;
}

void add_mesh_rows(CheckReport& r, const Genus2Mesh& mesh) {
  const std::string at = "level " + std::to_string(mesh.level);
  const double area = mesh.hyperbolic_area();
  const double expected = 4.0 * std::numbers::pi;
  r.add("euler_characteristic", at, mesh.euler_characteristic(), -2.0, Relation::Equal);
  r.add("triangle_count", at, static_cast<double>(mesh.triangles.size()),
        8.0 * std::pow(4.0, mesh.level), Relation::Equal);
  r.add("area_relative_error", at, std::abs(area - expected) / expected, kAreaTol);
  int bad = 0;
  for (const auto& [a, b] : mesh.gluings)
    if (mesh.partner(mesh.partner(a)) != a || mesh.partner(b) != a) ++bad;
  r.add("gluing_involution_failures", at, bad, 0.0, Relation::Equal);
}

CheckReport run_rigidity(const RunConfig& c) {
  const double s = c.fixture.s;
  const Genus2Mesh mesh = genus2_mesh(c.mesh_level, c.max_mesh_level);
  RigidityOptions opt;
  opt.seed = c.seed;
  opt.scheme = c.scheme;
  const RigidityOperator op = rigidity_operator(mesh, s, opt);
  const double floor = c.tolerance.value_or(kSpectralFloor);

  CheckReport r;
  r.set_provenance("rigidity.fixture", "fuchsian_family (umbilic)");
  r.set_provenance("rigidity.solver", op.dense ? "dense" : "shift-invert");
  r.set_provenance("rigidity.tan_abs_s", format_number(op.tan_abs_s));
  r.set_provenance("rigidity.principal_curvature_range",
                   format_number(op.k_min) + ".." + format_number(op.k_max));
  echo_tolerance(r, "spectral_floor", floor);
  echo_tolerance(r, "relator", kRelatorTol);
  echo_tolerance(r, "area", kAreaTol);
  echo_tolerance(r, "constant_image", kConstantImageTol);
  r.add("relator_residual", "octagon", octagon_generators().relator_residual(), kRelatorTol);
  add_mesh_rows(r, mesh);
  const std::string at = "level " + std::to_string(mesh.level);
  r.add("jbj_anisotropy", at, op.anisotropy, opt.isotropy_tol);
  r.add("constant_image", at, op.constant_residual, kConstantImageTol);
  for (Eigen::Index i = 0; i < op.shifted_laplacian.size(); ++i)
    r.add("shifted_laplacian_magnitude", "index " + std::to_string(i),
          std::abs(op.shifted_laplacian[i]), floor, Relation::GreaterEqual);
  r.add("smallest_magnitude", at, op.smallest_magnitude, floor, Relation::GreaterEqual);
  r.add("kernel_dimension", at, op.kernel_dimension, 0.0, Relation::Equal);
  return r;
}

CheckReport run_fuchsian(const RunConfig& c) {
  CheckReport r;
  const HolonomySet hol = octagon_generators();
  const double trace = 2.0 * (1.0 + std::numbers::sqrt2);
  echo_tolerance(r, "generator_trace", kTraceTol);
  echo_tolerance(r, "relator", kRelatorTol);
  echo_tolerance(r, "phi_k_parameter", kPhiParameterTol);
  const double metric_tol = c.tolerance.value_or(kPhiMetricTol);
  echo_tolerance(r, "phi_k_metric", metric_tol);
  static const char* names[4] = {"a1", "b1", "a2", "b2"};
  for (int k = 0; k < 4; ++k) {
    const Mat2& g = hol.generators[k];
    r.add("generator_trace_error", names[k], std::abs(std::abs(g.trace()) - trace), kTraceTol);
    r.add("generator_determinant_error", names[k], std::abs(g.determinant() - 1.0), kTraceTol);
  }
  r.add("relator_residual", "octagon", hol.relator_residual(), kRelatorTol);

  const Genus2Mesh mesh = genus2_mesh(c.mesh_level, c.max_mesh_level);
  add_mesh_rows(r, mesh);
  if (!c.mesh_out.empty()) {
    std::ofstream out(c.mesh_out);
    if (!out) throw Error(ErrorKind::Config, "cannot write mesh file '" + c.mesh_out + "'");
    write_mesh(out, mesh);
    r.set_provenance("mesh_out", c.mesh_out);
  }

  const auto points = kernels::sample_points(ChartBox{}, c.samples, c.seed);
  for (double k : c.phi_k) {
    const std::string at = "K=" + format_number(k);
    const double s = fuchsian_parameter_for_curvature(k);
    r.add("phi_k_parameter", at, std::abs(-1.0 / (std::cos(s) * std::cos(s)) - k),
          kPhiParameterTol);
    const auto errs = kernels::sweep<std::array<double, 2>>(
        points.size(),
        [&](std::size_t i) {
          const PhiK phi = phi_K_fuchsian(k, points[i], c.scheme);
          const Mat2 g = hyperbolic_metric(points[i]);
          return std::array<double, 2>{max_abs(phi.left - g), max_abs(phi.normalized - g)};
        },
        Exec::Parallel);
    double left = 0.0, normalized = 0.0;
    for (const auto& e : errs) {
      left = std::max(left, e[0]);
      normalized = std::max(normalized, e[1]);
    }
    r.add("phi_k_left_metric", at, left, metric_tol);
    r.add("phi_k_normalized_metric", at, normalized, metric_tol);
  }
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check",    "mess",     "dual",   "extend",
                                              "rigidity", "fuchsian", "version"};
  return names;
}

CheckReport execute(const RunConfig& config) {
  validate(config);
  if (config.threads > 0) kernels::set_thread_count(config.threads);
  CheckReport r;
  if (config.command == "check") r = run_check(config);
  else if (config.command == "mess") r = run_mess(config);
  else if (config.command == "dual") r = run_dual(config);
  else if (config.command == "extend") r = run_extend(config);
  else if (config.command == "rigidity") r = run_rigidity(config);
  else if (config.command == "fuchsian") r = run_fuchsian(config);
  else throw Error(ErrorKind::Config, "unknown command '" + config.command + "'");
  for (const auto& [k, v] : describe(config)) r.set_provenance("config." + k, v);
  r.set_provenance("version", ADSRIGID_VERSION);
  r.set_provenance("threads", std::to_string(kernels::thread_count()));
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for spacelike surfaces in anti-de Sitter 3-space", "adsrigid"};
  app.require_subcommand(1, 1);

  // Every flag is collected as text and routed through the config setter, so
  // command line and config file share one parser and one set of checks.
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file; flags override it");
  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  static const Flag flags[] = {
      {"--fixture", "fixture", "totally_geodesic | fuchsian_family | graph_bump"},
      {"--s", "s", "Fuchsian family parameter in (-pi/2, 0]"},
      {"--amplitude", "amplitude", "graph_bump amplitude"},
      {"--width", "width", "graph_bump width"},
      {"--samples", "samples", "number of seeded sample points"},
      {"--seed", "seed", "random seed"},
      {"--tolerance", "tolerance", "override of the command's primary tolerance"},
      {"--fd-step", "fd_step", "finite-difference step for first derivatives"},
      {"--field-step", "field_step", "step for second and nested derivatives"},
      {"--richardson", "richardson", "Richardson extrapolation levels"},
      {"--mesh-level", "mesh_level", "subdivision level of the genus-2 mesh"},
      {"--max-mesh-level", "max_mesh_level", "largest mesh level accepted"},
      {"--s-samples", "s_samples", "comma-separated s values for extend"},
      {"--phi-k", "phi_k", "comma-separated curvatures for the phi_K rows"},
      {"--output", "output", "table | records | csv"},
      {"--out-file", "out_file", "write the report here instead of stdout"},
      {"--mesh-out", "mesh_out", "export the mesh (fuchsian command)"},
      {"--threads", "threads", "OpenMP threads (0 = default)"},
  };
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& f : flags) {
    options[f.key] = app.add_option(f.name, values[f.key], f.help)->allow_extra_args(false);
  }
  for (const auto& name : command_names()) app.add_subcommand(name)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig config;
  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "version") {
    out << "adsrigid " << ADSRIGID_VERSION << '\n';
    return 0;
  }
  try {
    if (!config_path.empty()) apply_config_file(config, config_path);
    for (const auto& f : flags)
      if (options[f.key]->count() > 0) apply_setting(config, f.key, values[f.key]);
    const CheckReport report = execute(config);
    const std::string bytes = emit_report(report, config.output);
    if (config.out_file.empty()) {
      out << bytes;
    } else {
      std::ofstream file(config.out_file, std::ios::binary);
      if (!file) throw Error(ErrorKind::Config, "cannot write '" + config.out_file + "'");
      file << bytes;
    }
    if (!report.passed()) err << "adsrigid: " << config.command << ": some checks failed\n";
    return exit_code(report);
  } catch (const Error& e) {
    err << "adsrigid: " << e.what() << '\n';
    return e.kind() == ErrorKind::Config ? 2 : 1;
  } catch (const std::exception& e) {
    err << "adsrigid: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace adsrigid::cli
