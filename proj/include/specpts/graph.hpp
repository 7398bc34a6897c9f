#pragma once

#include <Eigen/Dense>

#include "specpts/geometry.hpp"
#include "specpts/weights.hpp"

namespace specpts {

/// Dense weighted graph on n vertices: edge weights over EdgeIndex, symmetric
/// adjacency with zero diagonal, degrees, and Laplacian diag(d) - W.
struct WeightedGraph {
  int n = 0;
  Eigen::VectorXd weights;
  Eigen::MatrixXd adjacency;
  Eigen::VectorXd degrees;
  Eigen::MatrixXd laplacian;
};

/// w_k = f(d^2 of pair k). Throws ZeroDistanceError when f is singular at
/// zero and a pair coincides exactly.
Eigen::VectorXd weight_vector(const PointConfig& config,
                              const WeightFunction& f);

WeightedGraph assemble(const PointConfig& config, const WeightFunction& f);

/// Graph built directly from an edge-weight vector (length n-choose-2).
WeightedGraph graph_from_weights(int n, const Eigen::VectorXd& w);

/// Arc-vertex incidence matrix of the complete graph: row k has +1 at the
/// head (larger index) and -1 at the tail. B^t diag(w) B is the Laplacian.
Eigen::MatrixXd incidence_matrix(int n);

}  // namespace specpts
