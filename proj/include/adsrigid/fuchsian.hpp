#pragma once

// Genus-2 hyperbolic surface from the regular octagon with angles pi/4:
// holonomy generators pairing opposite sides, a triangulated fundamental
// domain glued along the side pairings, and P1 finite element operators.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "adsrigid/ads_core.hpp"
#include "adsrigid/linalg2.hpp"

namespace adsrigid {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Generators a1, b1, a2, b2. Generator k translates along the axis through
/// the midpoint of side k and maps side k + 4 onto side k.
struct HolonomySet {
  std::array<Mat2, 4> generators;

  const Mat2& a1() const { return generators[0]; }
  const Mat2& b1() const { return generators[1]; }
  const Mat2& a2() const { return generators[2]; }
  const Mat2& b2() const { return generators[3]; }

  /// Product along the octagon's vertex cycle, a1 b2 a2^-1 b1 a1^-1 b2^-1 a2 b1^-1.
  Mat2 relator() const;
  /// min(|relator - Id|, |relator + Id|), max-abs entry.
  double relator_residual() const;
};

struct OctagonGeometry {
  double circumradius;  // hyperbolic distance centre -> vertex
  double inradius;      // centre -> side midpoint
  double side_length;
};

OctagonGeometry regular_octagon();

HolonomySet octagon_generators();

/// Action of SL(2,R) on the hyperboloid model: S(y) -> A S(y) A^T with
/// S(y) = [[y3 + y1, y2], [y2, y3 - y1]].
Eigen::Vector3d act_on_hyperboloid(const Mat2& a, const Eigen::Vector3d& y);

/// The AdS isometry (A, A^{-T}); it preserves the plane {x4 = 0} and acts on
/// it as act_on_hyperboloid. Conjugate to the diagonal pair (A, A) by (Id, J).
IsometryPair fuchsian_isometry(const Mat2& a);

/// <p, q> in R^{2,1} (signature + + -).
double bilinear21(const Eigen::Vector3d& p, const Eigen::Vector3d& q);
double hyperbolic_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q);
/// Area of the geodesic triangle (pi minus the angle sum).
double hyperbolic_triangle_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                const Eigen::Vector3d& c);

inline constexpr int kDefaultMaxMeshLevel = 6;
inline constexpr double kGluingTolerance = 1e-9;

/// Triangulated fundamental domain. Edge id 3t + k is the edge of triangle t
/// from corner k to corner k + 1 (mod 3).
struct Genus2Mesh {
  int level = 0;
  std::vector<Eigen::Vector3d> vertices;  // hyperboloid coordinates
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::pair<int, int>> gluings;  // boundary edge ids, first < second
  std::vector<int> vertex_class;             // glued vertex index per vertex
  int glued_vertex_count = 0;

  int glued_edge_count() const;
  int euler_characteristic() const;
  double hyperbolic_area() const;
  /// Partner edge id of a boundary edge, -1 for interior edges.
  int partner(int edge) const;
};

/// Central fan of 8 triangles, `level` rounds of midpoint subdivision, and
/// boundary identification through the octagon generators.
Genus2Mesh genus2_mesh(int level, int max_level = kDefaultMaxMeshLevel);

/// Plain-text export: a header line, "vertices N" then N lines of 3 reals,
/// "triangles M" then M lines of 3 indices, "gluings G" then G lines of 2
/// edge ids.
void write_mesh(std::ostream& out, const Genus2Mesh& mesh);
/// Reads the export format back (gluing classes are recomputed).
Genus2Mesh read_mesh(std::istream& in);

/// Per-triangle P1 data. Edge lengths are exact hyperbolic lengths; the
/// element matrices are those of the Euclidean triangle with the same
/// lengths, with the mass rescaled to the hyperbolic area.
struct TriangleElement {
  std::array<int, 3> nodes;  // glued indices
  std::array<double, 3> lengths;  // opposite to corner 0, 1, 2
  double hyperbolic_area = 0.0;
  double euclidean_area = 0.0;
  Eigen::Matrix3d stiffness;
  Eigen::Matrix3d mass;
  Eigen::Vector3d centroid;  // on the hyperboloid
};

inline constexpr double kMinTriangleArea = 1e-14;

std::vector<TriangleElement> triangle_elements(const Genus2Mesh& mesh);

struct DiscreteOperators {
  SparseMatrix stiffness;  // int <grad u, grad v>, conformally invariant
  SparseMatrix mass;       // int u v, scaled
  int size() const { return static_cast<int>(mass.rows()); }
};

/// Operators for the hyperbolic metric multiplied by `scale`.
DiscreteOperators discrete_operators(const Genus2Mesh& mesh, double scale = 1.0);

}  // namespace adsrigid
