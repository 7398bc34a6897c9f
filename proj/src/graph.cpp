#include "specpts/graph.hpp"

#include <stdexcept>

#include "specpts/errors.hpp"

namespace specpts {

Eigen::VectorXd weight_vector(const PointConfig& config,
                              const WeightFunction& f) {
  const int n = config.size();
  EdgeIndex edges(n);
  Eigen::VectorXd w(edges.count());
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d2 = pair_geometry(config, i, j).d2;
      if (d2 == 0.0 && f.singular_at_zero())
        throw ZeroDistanceError("singular kernel on coincident pair");
      w[k++] = f(d2);
    }
  }
  return w;
}

WeightedGraph graph_from_weights(int n, const Eigen::VectorXd& w) {
  EdgeIndex edges(n);
  if (w.size() != edges.count())
    throw std::invalid_argument("weight vector has wrong length");
  WeightedGraph g;
  g.n = n;
  g.weights = w;
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.adjacency(i, j) = w[k];
      g.adjacency(j, i) = w[k];
      ++k;
    }
  }
  g.degrees = g.adjacency.rowwise().sum();
  g.laplacian = -g.adjacency;
  g.laplacian.diagonal() += g.degrees;
  return g;
}

WeightedGraph assemble(const PointConfig& config, const WeightFunction& f) {
  return graph_from_weights(config.size(), weight_vector(config, f));
}

Eigen::MatrixXd incidence_matrix(int n) {
  EdgeIndex edges(n);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(edges.count(), n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      B(k, j) = 1.0;   // head: larger index
      B(k, i) = -1.0;  // tail
      ++k;
    }
  }
  return B;
}

}  // namespace specpts
