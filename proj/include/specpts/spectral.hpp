#pragma once

#include <Eigen/Dense>

namespace specpts {

/// Ascending eigenvalues with orthonormal eigenvectors (columns, same order).
struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Full symmetric eigendecomposition. Rejects matrices whose asymmetry
/// exceeds 1e-10 relative to the largest entry.
EigenPairs sym_eigen(const Eigen::MatrixXd& A);

/// Eigenvalues only (ascending).
Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& A);

enum class Invariant {
  TraceL,        // sum of Laplacian eigenvalues
  FrobeniusSqW,  // squared Frobenius norm = second adjacency moment
  Lambda2,       // algebraic connectivity
  LambdaMax,     // Laplacian spectral radius
  RTot,          // total effective resistance n * sum_{i>1} 1/lambda_i
  CondNumber,    // lambda_n / lambda_2
  Variance,      // population variance of the eigenvalues
  IntervalDist,  // sum_j |l_j - lo| + |l_j - hi| - (hi - lo)
};

enum class Sense { Minimize, Maximize };

struct InvariantId {
  Invariant kind = Invariant::TraceL;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  Sense sense = Sense::Minimize;

  static InvariantId of(Invariant kind, Sense sense = Sense::Minimize);
  static InvariantId interval(double lo, double hi,
                              Sense sense = Sense::Minimize);
};

/// True when the invariant reads the adjacency spectrum instead of the
/// Laplacian one (FrobeniusSqW only).
bool uses_adjacency(const InvariantId& id);

/// Evaluates the invariant on an ascending spectrum. RTot and CondNumber
/// throw DisconnectedGraphError unless lambda_2 > 1e-12 * max(lambda_n, 1);
/// RTot skips exactly the single zero mode.
double invariant(const Eigen::VectorXd& spectrum, const InvariantId& id);

double frobenius_sq(const Eigen::MatrixXd& W);

}  // namespace specpts
