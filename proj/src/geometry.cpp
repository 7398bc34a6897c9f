#include "specpts/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace specpts {

int ambient_dimension(const ManifoldSpec& manifold) {
  if (const auto* s = std::get_if<Sphere>(&manifold)) return s->ambient_dim;
  return 2;
}

bool is_sphere(const ManifoldSpec& manifold) {
  return std::holds_alternative<Sphere>(manifold);
}

bool is_torus(const ManifoldSpec& manifold) {
  return std::holds_alternative<FlatTorus>(manifold);
}

const Eigen::Matrix2d& torus_basis(const ManifoldSpec& manifold) {
  return std::get<FlatTorus>(manifold).basis;
}

EdgeIndex::EdgeIndex(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("EdgeIndex needs n >= 2");
}

std::pair<int, int> EdgeIndex::pair_of(int k) const {
  if (k < 0 || k >= count()) throw std::out_of_range("edge index");
  int i = 0;
  int rem = k;
  while (rem >= n_ - 1 - i) {
    rem -= n_ - 1 - i;
    ++i;
  }
  return {i, i + 1 + rem};
}

int EdgeIndex::index_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_ || i == j) throw std::out_of_range("vertex pair");
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

double sphere_distance_sq(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (std::abs(x.norm() - 1.0) > 1e-9 || std::abs(y.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("sphere_distance_sq: non-unit input");
  const double d2 = 2.0 - 2.0 * x.dot(y);
  return std::clamp(d2, 0.0, 4.0);
}

PairGeometry torus_pair(const Eigen::Vector2d& x, const Eigen::Vector2d& y,
                        const Eigen::Matrix2d& basis) {
  const Eigen::Vector2d diff = x - y;
  PairGeometry best;
  best.d2 = std::numeric_limits<double>::infinity();
  for (int p = -1; p <= 1; ++p) {
    for (int q = -1; q <= 1; ++q) {
      const Eigen::Vector2d cand =
          diff + basis.col(0) * double(p) + basis.col(1) * double(q);
      const double d2 = cand.squaredNorm();
      if (d2 < best.d2) {  // strict: lexicographically first translate wins ties
        best.d2 = d2;
        best.displacement = cand;
      }
    }
  }
  return best;
}

double torus_distance_sq(const Eigen::Vector2d& x, const Eigen::Vector2d& y,
                         const Eigen::Matrix2d& basis) {
  return torus_pair(x, y, basis).d2;
}

PairGeometry pair_geometry(const PointConfig& config, int i, int j) {
  if (is_torus(config.manifold)) {
    return torus_pair(config.points.row(i).transpose().head<2>(),
                      config.points.row(j).transpose().head<2>(),
                      torus_basis(config.manifold));
  }
  PairGeometry g;
  g.displacement = (config.points.row(i) - config.points.row(j)).transpose();
  g.d2 = sphere_distance_sq(config.points.row(i).transpose(),
                            config.points.row(j).transpose());
  return g;
}

Eigen::VectorXd all_pair_distances_sq(const PointConfig& config) {
  const int n = config.size();
  EdgeIndex edges(n);
  Eigen::VectorXd d2(edges.count());
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d2[k++] = pair_geometry(config, i, j).d2;
  return d2;
}

PointConfig random_config(const ManifoldSpec& manifold, int n,
                          std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_config needs n >= 2");
  std::mt19937_64 rng(seed);
  PointConfig config;
  config.manifold = manifold;
  const int d = ambient_dimension(manifold);
  config.points.resize(n, d);
  if (is_torus(manifold)) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const Eigen::Matrix2d& basis = torus_basis(manifold);
    for (int i = 0; i < n; ++i) {
      const Eigen::Vector2d frac(unif(rng), unif(rng));
      config.points.row(i) = (basis * frac).transpose();
    }
  } else {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd v(d);
      do {
        for (int c = 0; c < d; ++c) v[c] = gauss(rng);
      } while (v.norm() < 1e-12);
      config.points.row(i) = v.transpose() / v.norm();
    }
  }
  return config;
}

Eigen::VectorXd sphere_tangent_project(const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& g) {
  return g - g.dot(x) * x;
}

Eigen::Vector2d wrap_into_cell(const Eigen::Vector2d& x,
                               const Eigen::Matrix2d& basis) {
  Eigen::Vector2d frac = basis.inverse() * x;
  frac[0] -= std::floor(frac[0]);
  frac[1] -= std::floor(frac[1]);
  return basis * frac;
}

void canonicalize(PointConfig& config) {
  if (is_torus(config.manifold)) {
    const Eigen::Matrix2d& basis = torus_basis(config.manifold);
    const Eigen::Matrix2d inv = basis.inverse();
    for (int i = 0; i < config.size(); ++i) {
      Eigen::Vector2d frac = inv * config.points.row(i).transpose();
      frac[0] -= std::floor(frac[0]);
      frac[1] -= std::floor(frac[1]);
      config.points.row(i) = (basis * frac).transpose();
    }
  } else {
    for (int i = 0; i < config.size(); ++i)
      config.points.row(i) /= config.points.row(i).norm();
  }
}

double min_pair_distance(const PointConfig& config) {
  const int n = config.size();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      best = std::min(best, pair_geometry(config, i, j).d2);
  return std::sqrt(best);
}

bool all_points_distinct(const PointConfig& config, double tol) {
  return min_pair_distance(config) > tol;
}

}  // namespace specpts
