#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <variant>

namespace specpts {

/// Unit sphere S^{d-1} embedded in R^d. Distances are chordal (Euclidean in
/// the embedding); points are stored as unit vectors.
struct Sphere {
  int ambient_dim = 3;
};

/// Flat torus R^2 / basis(Z^2). The columns of `basis` are the period
/// vectors; points are stored in fundamental-cell coordinates basis*[0,1)^2.
struct FlatTorus {
  Eigen::Matrix2d basis;
};

using ManifoldSpec = std::variant<Sphere, FlatTorus>;

int ambient_dimension(const ManifoldSpec& manifold);
bool is_sphere(const ManifoldSpec& manifold);
bool is_torus(const ManifoldSpec& manifold);
const Eigen::Matrix2d& torus_basis(const ManifoldSpec& manifold);

/// Ordered pointset on a manifold, one point per row.
struct PointConfig {
  ManifoldSpec manifold;
  Eigen::MatrixXd points;

  int size() const { return static_cast<int>(points.rows()); }
  int dim() const { return static_cast<int>(points.cols()); }
};

/// Canonical enumeration of the n-choose-2 unordered pairs {i,j}, i < j,
/// in lexicographic order. For edge k the head is the larger index and the
/// tail the smaller one.
class EdgeIndex {
 public:
  explicit EdgeIndex(int n);

  int n() const { return n_; }
  int count() const { return n_ * (n_ - 1) / 2; }
  std::pair<int, int> pair_of(int k) const;  // (i, j) with i < j
  int index_of(int i, int j) const;          // inverse of pair_of
  int head(int k) const { return pair_of(k).second; }
  int tail(int k) const { return pair_of(k).first; }

 private:
  int n_;
};

/// Squared distance and the displacement x - y realizing it. On a torus the
/// displacement is the minimum-image one (ties broken by the lexicographically
/// first translate).
struct PairGeometry {
  double d2 = 0.0;
  Eigen::VectorXd displacement;
};

/// Chordal squared distance 2 - 2<x,y> on the unit sphere, clamped to [0,4].
/// Rejects inputs whose norm deviates from 1 by more than 1e-9.
double sphere_distance_sq(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Minimum-image squared distance on the torus: the smallest |x - y - Bp|^2
/// over integer shifts p in {-1,0,1}^2. Valid for points in the fundamental
/// cell of a reduced basis (all bases produced here are reduced).
PairGeometry torus_pair(const Eigen::Vector2d& x, const Eigen::Vector2d& y,
                        const Eigen::Matrix2d& basis);
double torus_distance_sq(const Eigen::Vector2d& x, const Eigen::Vector2d& y,
                         const Eigen::Matrix2d& basis);

PairGeometry pair_geometry(const PointConfig& config, int i, int j);

/// Squared distances of every pair, ordered by EdgeIndex.
Eigen::VectorXd all_pair_distances_sq(const PointConfig& config);

/// Uniform random configuration: uniform on the torus cell, normalized
/// isotropic Gaussians on the sphere. Deterministic for a given seed.
PointConfig random_config(const ManifoldSpec& manifold, int n,
                          std::uint64_t seed);

/// g minus its radial component at x: g - <g,x> x.
Eigen::VectorXd sphere_tangent_project(const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& g);

Eigen::Vector2d wrap_into_cell(const Eigen::Vector2d& x,
                               const Eigen::Matrix2d& basis);

/// Wraps torus coordinates into the fundamental cell / renormalizes sphere
/// points. Torus configs must be re-wrapped after every coordinate update.
void canonicalize(PointConfig& config);

double min_pair_distance(const PointConfig& config);
bool all_points_distinct(const PointConfig& config, double tol = 1e-14);

}  // namespace specpts
