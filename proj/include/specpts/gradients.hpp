#pragma once

#include <Eigen/Dense>

#include "specpts/geometry.hpp"
#include "specpts/graph.hpp"
#include "specpts/spectral.hpp"

namespace specpts {

/// dJ/dlambda for each invariant, evaluated on an ascending spectrum.
/// At kinks of IntervalDist, sign(0) is taken as 0 (midpoint subgradient).
Eigen::VectorXd invariant_gradient(const Eigen::VectorXd& spectrum,
                                   const InvariantId& id);

/// True when the eigenvalue targeted by the rule (lambda_2 and/or lambda_n)
/// has a neighbor closer than 1e-9, so the returned gradient is a
/// subgradient selection tied to the solver's eigenvector choice.
bool targeted_eigenvalue_repeated(const Eigen::VectorXd& spectrum,
                                  const InvariantId& id);

struct ConfigGradient {
  Eigen::MatrixXd ambient;  // n x d, per-point gradient rows
  bool degenerate = false;  // subgradient selection at a repeated eigenvalue
};

/// Gradient of J(lambda(W)) w.r.t. point positions:
///   grad_i = 4 sum_k V_ik f'(d2_ik) (x_i - x_k),  V = U diag(dJ) U^t,
/// with minimum-image displacements on a torus.
ConfigGradient grad_positions_W(const PointConfig& config,
                                const WeightFunction& f, const InvariantId& id,
                                const EigenPairs& adjacency_pairs);

/// Gradient of J(lambda(L)) w.r.t. point positions:
///   grad_i = 2 sum_k (V_kk - 2 V_ik + V_ii) f'(d2_ik) (x_i - x_k).
ConfigGradient grad_positions_L(const PointConfig& config,
                                const WeightFunction& f, const InvariantId& id,
                                const EigenPairs& laplacian_pairs);

struct EdgeGradient {
  Eigen::VectorXd values;  // one entry per edge, EdgeIndex order
  bool degenerate = false;
};

/// Gradient of J(lambda(L)) w.r.t. the edge weights:
///   g_k = sum_j (BU)_{kj}^2 dJ_j  =  diag[(BU) diag(dJ) (BU)^t].
EdgeGradient grad_edge_weights(const InvariantId& id,
                               const EigenPairs& laplacian_pairs,
                               const Eigen::MatrixXd& incidence);

/// Tangent-projects each gradient row at the corresponding sphere point.
Eigen::MatrixXd tangent_project_rows(const PointConfig& config,
                                     const Eigen::MatrixXd& ambient);

/// Objective value J(lambda) for a configuration. TraceL and FrobeniusSqW
/// avoid the eigensolve entirely.
double objective_value(const PointConfig& config, const WeightFunction& f,
                       const InvariantId& id);

struct ObjectiveEvaluation {
  double value = 0.0;
  Eigen::MatrixXd gradient;  // tangent-projected on spheres
  bool degenerate = false;
};

ObjectiveEvaluation objective_with_gradient(const PointConfig& config,
                                            const WeightFunction& f,
                                            const InvariantId& id);

struct FdReport {
  double max_rel_err = 0.0;  // worst |analytic - fd| / max-norm of the gradients
  int point = -1;
  int coord = -1;
  double analytic = 0.0;
  double fd = 0.0;
};

/// Central-difference check of the analytic gradient over every coordinate.
/// Sphere perturbations are retracted (renormalized), so both sides compare
/// tangent-projected derivatives. h must lie in [1e-7, 1e-3].
FdReport fd_check(const PointConfig& config, const WeightFunction& f,
                  const InvariantId& id, double h);

}  // namespace specpts
