#include "adsrigid/fuchsian.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "adsrigid/error.hpp"

namespace adsrigid {

namespace {

constexpr double kPi = std::numbers::pi;

Mat2 rotation(double angle) {
  Mat2 r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

// Hyperbolic translation by `distance` towards the direction at angle `phi`.
// Rotating the hyperboloid by theta is conjugation by rotation(theta / 2).
Mat2 translation(double phi, double distance) {
  const Eigen::Vector2d diag(std::exp(0.5 * distance), std::exp(-0.5 * distance));
  return rotation(0.5 * phi) * diag.asDiagonal() * rotation(-0.5 * phi);
}

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

Mat2 HolonomySet::relator() const {
  const Mat2& a1_ = generators[0];
  const Mat2& b1_ = generators[1];
  const Mat2& a2_ = generators[2];
  const Mat2& b2_ = generators[3];
  return a1_ * b2_ * a2_.inverse() * b1_ * a1_.inverse() * b2_.inverse() * a2_ * b1_.inverse();
}

double HolonomySet::relator_residual() const {
  const Mat2 r = relator();
  return std::min(max_abs(r - Mat2::Identity()), max_abs(r + Mat2::Identity()));
}

OctagonGeometry regular_octagon() {
  const double cot = 1.0 / std::tan(kPi / 8.0);
  return {std::acosh(cot * cot), std::acosh(cot), 2.0 * std::acosh(cot)};
}

HolonomySet octagon_generators() {
  const double inradius = regular_octagon().inradius;
  HolonomySet h;
  for (int k = 0; k < 4; ++k) h.generators[k] = translation((k + 0.5) * kPi / 4.0, 2.0 * inradius);
  return h;
}

Eigen::Vector3d act_on_hyperboloid(const Mat2& a, const Eigen::Vector3d& y) {
  Mat2 s;
  s << y[2] + y[0], y[1], y[1], y[2] - y[0];
  const Mat2 t = a * s * a.transpose();
  return {0.5 * (t(0, 0) - t(1, 1)), 0.5 * (t(0, 1) + t(1, 0)), 0.5 * (t(0, 0) + t(1, 1))};
}

IsometryPair fuchsian_isometry(const Mat2& a) { return {a, a.inverse().transpose()}; }

double bilinear21(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  return p[0] * q[0] + p[1] * q[1] - p[2] * q[2];
}

double hyperbolic_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  // Chord form; acosh(-<p,q>) loses half the digits for nearby points.
  const Eigen::Vector3d d = p - q;
  const double chord2 = std::max(0.0, bilinear21(d, d));
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

double hyperbolic_triangle_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                const Eigen::Vector3d& c) {
  const double la = hyperbolic_distance(b, c);
  const double lb = hyperbolic_distance(c, a);
  const double lc = hyperbolic_distance(a, b);
  auto angle = [](double opp, double s1, double s2) {
    const double cosv =
        (std::cosh(s1) * std::cosh(s2) - std::cosh(opp)) / (std::sinh(s1) * std::sinh(s2));
    return std::acos(std::clamp(cosv, -1.0, 1.0));
  };
  return kPi - angle(la, lb, lc) - angle(lb, lc, la) - angle(lc, la, lb);
}

namespace {

Eigen::Vector3d hyperbolic_midpoint(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  const Eigen::Vector3d m = p + q;
  return m / std::sqrt(-bilinear21(m, m));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::pair<int, int> edge_vertices(const Genus2Mesh& m, int edge) {
  const auto& t = m.triangles[static_cast<std::size_t>(edge / 3)];
  return {t[edge % 3], t[(edge % 3 + 1) % 3]};
}

std::vector<int> boundary_edges(const Genus2Mesh& m) {
  std::map<std::pair<int, int>, int> count;
  const int ne = static_cast<int>(m.triangles.size()) * 3;
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = edge_vertices(m, e);
    ++count[{std::min(a, b), std::max(a, b)}];
  }
  std::vector<int> out;
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = edge_vertices(m, e);
    if (count[{std::min(a, b), std::max(a, b)}] == 1) out.push_back(e);
  }
  return out;
}

// Glued indices numbered in order of first appearance.
void finalize_classes(Genus2Mesh& m, UnionFind& uf) {
  const int n = static_cast<int>(m.vertices.size());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  m.vertex_class.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (label[root] < 0) label[root] = next++;
    m.vertex_class[v] = label[root];
  }
  m.glued_vertex_count = next;
}

}  // namespace

int Genus2Mesh::partner(int edge) const {
  for (const auto& [a, b] : gluings) {
    if (a == edge) return b;
    if (b == edge) return a;
  }
  return -1;
}

int Genus2Mesh::glued_edge_count() const {
  const int all = static_cast<int>(triangles.size()) * 3;
  const int boundary = static_cast<int>(gluings.size()) * 2;
  return (all - boundary) / 2 + boundary / 2;
}

int Genus2Mesh::euler_characteristic() const {
  return glued_vertex_count - glued_edge_count() + static_cast<int>(triangles.size());
}

double Genus2Mesh::hyperbolic_area() const {
  double area = 0.0;
  for (const auto& t : triangles)
    area += hyperbolic_triangle_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]);
  return area;
}

Genus2Mesh genus2_mesh(int level, int max_level) {
  if (level < 0) throw Error(ErrorKind::Precondition, "mesh level must be non-negative");
  if (level > max_level) {
    std::ostringstream msg;
    msg << "mesh level " << level << " exceeds the configured maximum " << max_level;
    throw Error(ErrorKind::Resource, msg.str());
  }
  Genus2Mesh m;
  m.level = level;
  const double radius = regular_octagon().circumradius;
  m.vertices.emplace_back(0.0, 0.0, 1.0);
  for (int k = 0; k < 8; ++k) {
    const double th = k * kPi / 4.0;
    m.vertices.emplace_back(std::sinh(radius) * std::cos(th), std::sinh(radius) * std::sin(th),
                            std::cosh(radius));
  }
  for (int k = 0; k < 8; ++k) m.triangles.push_back({0, 1 + k, 1 + (k + 1) % 8});

  for (int round = 0; round < level; ++round) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      m.vertices.push_back(hyperbolic_midpoint(m.vertices[a], m.vertices[b]));
      const int id = static_cast<int>(m.vertices.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(m.triangles.size() * 4);
    for (const auto& t : m.triangles) {
      const int ab = midpoint(t[0], t[1]);
      const int bc = midpoint(t[1], t[2]);
      const int ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({ab, t[1], bc});
      next.push_back({ca, bc, t[2]});
      next.push_back({ab, bc, ca});
    }
    m.triangles = std::move(next);
  }

  // Side pairing: a boundary edge is glued to the edge its endpoints land on
  // under some generator.
  const HolonomySet hol = octagon_generators();
  std::vector<Mat2> moves;
  for (const auto& g : hol.generators) {
    moves.push_back(g);
    moves.push_back(g.inverse());
  }
  const std::vector<int> boundary = boundary_edges(m);
  UnionFind uf(static_cast<int>(m.vertices.size()));
  std::map<int, int> partner;
  for (int e : boundary) {
    if (partner.count(e)) continue;
    auto [a, b] = edge_vertices(m, e);
    bool found = false;
    for (const auto& g : moves) {
      const Eigen::Vector3d ga = act_on_hyperboloid(g, m.vertices[a]);
      const Eigen::Vector3d gb = act_on_hyperboloid(g, m.vertices[b]);
      for (int f : boundary) {
        if (f == e) continue;
        auto [c, d] = edge_vertices(m, f);
        if (hyperbolic_distance(ga, m.vertices[d]) < kGluingTolerance &&
            hyperbolic_distance(gb, m.vertices[c]) < kGluingTolerance) {
          if (partner.count(f)) throw Error(ErrorKind::Degenerate, "boundary edge glued twice");
          partner[e] = f;
          partner[f] = e;
          uf.unite(a, d);
          uf.unite(b, c);
          m.gluings.emplace_back(std::min(e, f), std::max(e, f));
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw Error(ErrorKind::Degenerate, "boundary edge without a partner");
  }
  std::sort(m.gluings.begin(), m.gluings.end());
  finalize_classes(m, uf);
  return m;
}

void write_mesh(std::ostream& out, const Genus2Mesh& mesh) {
  out << "# genus2-mesh level " << mesh.level << '\n';
  out << "vertices " << mesh.vertices.size() << '\n';
  out.precision(17);
  for (const auto& v : mesh.vertices) out << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  out << "triangles " << mesh.triangles.size() << '\n';
  for (const auto& t : mesh.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  out << "gluings " << mesh.gluings.size() << '\n';
  for (const auto& [a, b] : mesh.gluings) out << a << ' ' << b << '\n';
}

Genus2Mesh read_mesh(std::istream& in) {
  Genus2Mesh m;
  std::string line;
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::Config, "malformed mesh file: " + what);
  };
  if (!std::getline(in, line) || line.rfind("# genus2-mesh level ", 0) != 0) fail("header");
  m.level = std::stoi(line.substr(20));
  auto expect = [&](const char* key) {
    std::string word;
    std::size_t n = 0;
    if (!(in >> word >> n) || word != key) fail(std::string("expected '") + key + "'");
    return n;
  };
  const std::size_t nv = expect("vertices");
  m.vertices.resize(nv);
  for (auto& v : m.vertices)
    if (!(in >> v[0] >> v[1] >> v[2])) fail("vertex line");
  const std::size_t nt = expect("triangles");
  m.triangles.resize(nt);
  for (auto& t : m.triangles)
    if (!(in >> t[0] >> t[1] >> t[2])) fail("triangle line");
  for (const auto& t : m.triangles)
    for (int i : t)
      if (i < 0 || static_cast<std::size_t>(i) >= nv) fail("vertex index out of range");
  const std::size_t ng = expect("gluings");
  m.gluings.resize(ng);
  UnionFind uf(static_cast<int>(nv));
  for (auto& g : m.gluings) {
    if (!(in >> g.first >> g.second)) fail("gluing line");
    const int ne = static_cast<int>(nt) * 3;
    if (g.first < 0 || g.second < 0 || g.first >= ne || g.second >= ne) fail("edge id out of range");
    // Orientable gluing: the edges are traversed in opposite directions.
    auto [a, b] = edge_vertices(m, g.first);
    auto [c, d] = edge_vertices(m, g.second);
    uf.unite(a, d);
    uf.unite(b, c);
  }
  finalize_classes(m, uf);
  return m;
}

std::vector<TriangleElement> triangle_elements(const Genus2Mesh& mesh) {
  std::vector<TriangleElement> out;
  out.reserve(mesh.triangles.size());
  for (const auto& t : mesh.triangles) {
    TriangleElement el;
    const Eigen::Vector3d& p0 = mesh.vertices[t[0]];
    const Eigen::Vector3d& p1 = mesh.vertices[t[1]];
    const Eigen::Vector3d& p2 = mesh.vertices[t[2]];
    for (int i = 0; i < 3; ++i) el.nodes[i] = mesh.vertex_class[t[i]];
    el.lengths = {hyperbolic_distance(p1, p2), hyperbolic_distance(p2, p0),
                  hyperbolic_distance(p0, p1)};
    // Heron, in the form that is stable for needle-like triangles.
    std::array<double, 3> l = el.lengths;
    std::sort(l.begin(), l.end(), std::greater<>());
    const double a = l[0], b = l[1], c = l[2];
    const double q = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    el.euclidean_area = 0.25 * std::sqrt(std::max(0.0, q));
    if (el.euclidean_area < kMinTriangleArea)
      throw Error(ErrorKind::Degenerate, "degenerate triangle in mesh");
    el.hyperbolic_area = hyperbolic_triangle_area(p0, p1, p2);

    el.stiffness.setZero();
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const double li = el.lengths[i], lj = el.lengths[j], lk = el.lengths[k];
      const double cot_i = (lj * lj + lk * lk - li * li) / (4.0 * el.euclidean_area);
      el.stiffness(j, k) -= 0.5 * cot_i;
      el.stiffness(k, j) -= 0.5 * cot_i;
      el.stiffness(j, j) += 0.5 * cot_i;
      el.stiffness(k, k) += 0.5 * cot_i;
    }
    el.mass = Eigen::Matrix3d::Constant(el.hyperbolic_area / 12.0);
    el.mass.diagonal().array() = el.hyperbolic_area / 6.0;
    const Eigen::Vector3d c3 = p0 + p1 + p2;
    el.centroid = c3 / std::sqrt(-bilinear21(c3, c3));
    out.push_back(el);
  }
  return out;
}

DiscreteOperators discrete_operators(const Genus2Mesh& mesh, double scale) {
  if (!(scale > 0.0)) throw Error(ErrorKind::Precondition, "metric scale must be positive");
  const auto elements = triangle_elements(mesh);
  std::vector<Eigen::Triplet<double>> ks, ms;
  ks.reserve(elements.size() * 9);
  ms.reserve(elements.size() * 9);
  for (const auto& el : elements)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        ks.emplace_back(el.nodes[i], el.nodes[j], el.stiffness(i, j));
        ms.emplace_back(el.nodes[i], el.nodes[j], scale * el.mass(i, j));
      }
  const int n = mesh.glued_vertex_count;
  DiscreteOperators ops;
  ops.stiffness.resize(n, n);
  ops.mass.resize(n, n);
  ops.stiffness.setFromTriplets(ks.begin(), ks.end());
  ops.mass.setFromTriplets(ms.begin(), ms.end());
  return ops;
}

}  // namespace adsrigid
