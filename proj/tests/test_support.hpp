#pragma once

#include <Eigen/Dense>
#include <random>

#include "specpts/geometry.hpp"

namespace specpts::testing {

/// Regular tetrahedron on S^2; all pairwise squared distances are 8/3.
inline PointConfig tetrahedron() {
  PointConfig config;
  config.manifold = Sphere{3};
  config.points.resize(4, 3);
  const double s = 1.0 / std::sqrt(3.0);
  config.points << s, s, s, s, -s, -s, -s, s, -s, -s, -s, s;
  return config;
}

/// Equilateral triangle on the unit circle S^1 in R^2.
inline PointConfig triangle_on_circle() {
  PointConfig config;
  config.manifold = Sphere{2};
  config.points.resize(3, 2);
  for (int i = 0; i < 3; ++i) {
    const double theta = 2.0 * M_PI * i / 3.0;
    config.points(i, 0) = std::cos(theta);
    config.points(i, 1) = std::sin(theta);
  }
  return config;
}

inline Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A(i, j) = A(j, i) = unif(rng);
  return A;
}

inline Eigen::VectorXd random_positive_weights(int count, std::uint64_t seed,
                                               double lo = 0.1,
                                               double hi = 2.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(lo, hi);
  Eigen::VectorXd w(count);
  for (int i = 0; i < count; ++i) w[i] = unif(rng);
  return w;
}

/// Roots of the characteristic polynomial, found with a general (non-
/// self-adjoint) solver on the companion matrix. Independent of the
/// symmetric eigensolver path.
inline Eigen::VectorXd charpoly_eigenvalues(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  // Faddeev-LeVerrier: coefficients of det(tI - A) = t^n + c1 t^{n-1} + ...
  std::vector<double> coef(n + 1, 0.0);
  coef[0] = 1.0;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    M = A * M + coef[k - 1] * Eigen::MatrixXd::Identity(n, n);
    coef[k] = -(A * M).trace() / k;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coef[n - i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  Eigen::VectorXd roots = solver.eigenvalues().real();
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Moore-Penrose pseudoinverse of a Laplacian through its eigenpairs,
/// dropping the single zero mode.
inline Eigen::MatrixXd laplacian_pseudoinverse(const Eigen::MatrixXd& L) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  const Eigen::VectorXd& lam = solver.eigenvalues();
  const Eigen::MatrixXd& U = solver.eigenvectors();
  Eigen::MatrixXd pinv = Eigen::MatrixXd::Zero(L.rows(), L.cols());
  for (int i = 1; i < lam.size(); ++i)
    pinv += (1.0 / lam[i]) * U.col(i) * U.col(i).transpose();
  return pinv;
}

}  // namespace specpts::testing
