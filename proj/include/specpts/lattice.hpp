#pragma once

#include <Eigen/Dense>
#include <vector>

#include "specpts/graph.hpp"
#include "specpts/spectral.hpp"
#include "specpts/weights.hpp"

namespace specpts {

/// Fundamental domain of unit-volume 2-D lattices modulo isometry:
/// b > 0, a in [0, 1/2], a^2 + b^2 >= 1. The square lattice sits at (0,1)
/// and the triangular one at (1/2, sqrt(3)/2).
struct LatticeParams {
  double a = 0.0;
  double b = 1.0;
};

inline constexpr double kTriangularB = 0.86602540378443864676;  // sqrt(3)/2

bool in_fundamental_domain(double a, double b, double tol = 1e-12);

/// Unit-determinant basis [[1/sqrt(b), a/sqrt(b)], [0, sqrt(b)]]; columns are
/// the basis vectors. Callers sweeping slightly outside the fundamental
/// domain may pass any b > 0.
Eigen::Matrix2d basis_from_params(double a, double b);

struct DualCell {
  Eigen::Matrix2d reciprocal;  // 2*pi*B^{-t}, columns are dual basis vectors
  double area = 0.0;           // (2*pi)^2 / |det B|
};

DualCell dual_cell(const Eigen::Matrix2d& basis);

/// Nonzero lattice vectors u with their kernel terms f(|u|^2), truncated when
/// the largest remaining term times a crude shell-count bound drops below
/// tail_tol. Throws CutoffError when f does not decay fast enough.
struct LatticeSum {
  std::vector<Eigen::Vector2d> points;
  std::vector<double> terms;
  double total = 0.0;  // dispersion at xi = 0
};

LatticeSum truncated_lattice_sum(const Eigen::Matrix2d& basis,
                                 const WeightFunction& f,
                                 double tail_tol = 1e-14);

/// Operator symbol omega_f(xi) = sum_u cos(xi . u) f(|u|^2).
double dispersion(const Eigen::Matrix2d& basis, const WeightFunction& f,
                  const Eigen::Vector2d& xi);
double dispersion(const LatticeSum& sum, const Eigen::Vector2d& xi);

/// Operator norm of the lattice adjacency operator: omega_f(0).
double operator_norm(const Eigen::Matrix2d& basis, const WeightFunction& f);

/// omega_f sampled on the M x M midpoint grid of the dual fundamental cell.
Eigen::VectorXd dispersion_grid(const Eigen::Matrix2d& basis,
                                const WeightFunction& f, int grid_m);

struct DoSHistogram {
  double lo = 0.0;
  double hi = 0.0;
  Eigen::VectorXd centers;
  Eigen::VectorXd mass;  // each sample weighted by cell area / M^2
  double total_mass = 0.0;
  int samples = 0;
};

DoSHistogram histogram(const Eigen::VectorXd& values, int bins, double lo,
                       double hi, double total_weight);

/// Density of states of the lattice adjacency operator: histogram of omega_f
/// over the dual-cell grid. Zeroth moment equals the dual cell area.
DoSHistogram dos(const Eigen::Matrix2d& basis, const WeightFunction& f,
                 int grid_m, int bins);

/// Bin of maximal mass, excluding the top 5% of the spectral range (the band
/// edge); locates the logarithmic singularity.
int van_hove_bin(const DoSHistogram& hist);

/// Moments of the adjacency density of states. Closed forms exist for
/// p in {0, 1, 2}: |B|, 0, |B| sum f^2. Quadrature works for any p >= 0.
double moment_w_closed(const Eigen::Matrix2d& basis, const WeightFunction& f,
                       int p);
double moment_w_quadrature(const Eigen::Matrix2d& basis,
                           const WeightFunction& f, int p, int grid_m);

/// First moment of the Laplacian density of states: |B| omega_f(0).
double moment_l1_closed(const Eigen::Matrix2d& basis, const WeightFunction& f);
double moment_l1_quadrature(const Eigen::Matrix2d& basis,
                            const WeightFunction& f, int grid_m);

/// N^2-vertex periodic truncation of the lattice: sites B(i,j) for
/// i,j in {-N/2, ..., N/2-1} with periods N*B and minimum-image metric.
struct TorusGraph {
  int N = 0;
  LatticeParams params;
  PointConfig config;
  WeightedGraph graph;
  double degree = 0.0;  // constant row sum
};

TorusGraph torus_graph(const LatticeParams& params, int N,
                       const WeightFunction& f);

struct SweepNode {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
};

struct SweepGrid {
  double a_lo = 0.0;
  double a_hi = 0.5;
  double b_lo = kTriangularB;
  double b_hi = kTriangularB + 1.0;
  int na = 41;
  int nb = 41;
};

/// Invariant of the N^2-vertex torus graph at every grid node inside the
/// fundamental domain (boundary included); nodes outside are skipped.
/// With `reciprocal` the emitted value is 1/invariant (e.g. 1/lambda_2).
std::vector<SweepNode> sweep_fundamental_domain(const InvariantId& id,
                                                bool reciprocal,
                                                const WeightFunction& f, int N,
                                                const SweepGrid& grid);

/// Sorted lengths of nonzero lattice vectors up to the given radius.
std::vector<double> length_spectrum(const Eigen::Matrix2d& basis,
                                    double radius);

}  // namespace specpts
