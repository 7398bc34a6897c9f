#include "specpts/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "specpts/errors.hpp"

namespace specpts {

namespace {

void check_symmetric(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols())
    throw NonSymmetricMatrixError("matrix is not square");
  const double scale = std::max(1e-300, A.cwiseAbs().maxCoeff());
  const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale)
    throw NonSymmetricMatrixError("matrix is not symmetric");
}

double connectivity_floor(const Eigen::VectorXd& spectrum) {
  return 1e-12 * std::max(spectrum[spectrum.size() - 1], 1.0);
}

}  // namespace

EigenPairs sym_eigen(const Eigen::MatrixXd& A) {
  check_symmetric(A);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& A) {
  check_symmetric(A);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed");
  return solver.eigenvalues();
}

InvariantId InvariantId::of(Invariant kind, Sense sense) {
  InvariantId id;
  id.kind = kind;
  id.sense = sense;
  return id;
}

InvariantId InvariantId::interval(double lo, double hi, Sense sense) {
  if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi");
  InvariantId id;
  id.kind = Invariant::IntervalDist;
  id.interval_lo = lo;
  id.interval_hi = hi;
  id.sense = sense;
  return id;
}

bool uses_adjacency(const InvariantId& id) {
  return id.kind == Invariant::FrobeniusSqW;
}

double invariant(const Eigen::VectorXd& spectrum, const InvariantId& id) {
  const int n = static_cast<int>(spectrum.size());
  if (n < 2) throw std::invalid_argument("spectrum too short");
  switch (id.kind) {
    case Invariant::TraceL:
      return spectrum.sum();
    case Invariant::FrobeniusSqW:
      return spectrum.squaredNorm();
    case Invariant::Lambda2:
      return spectrum[1];
    case Invariant::LambdaMax:
      return spectrum[n - 1];
    case Invariant::RTot: {
      if (spectrum[1] <= connectivity_floor(spectrum))
        throw DisconnectedGraphError("RTot needs a connected graph");
      double sum = 0.0;
      for (int i = 1; i < n; ++i) sum += 1.0 / spectrum[i];
      return n * sum;
    }
    case Invariant::CondNumber:
      if (spectrum[1] <= connectivity_floor(spectrum))
        throw DisconnectedGraphError("condition number needs a connected graph");
      return spectrum[n - 1] / spectrum[1];
    case Invariant::Variance: {
      const double mean = spectrum.mean();
      return spectrum.squaredNorm() / n - mean * mean;
    }
    case Invariant::IntervalDist: {
      double sum = 0.0;
      const double width = id.interval_hi - id.interval_lo;
      for (int i = 0; i < n; ++i)
        sum += std::abs(spectrum[i] - id.interval_lo) +
               std::abs(spectrum[i] - id.interval_hi) - width;
      return sum;
    }
  }
  return 0.0;
}

double frobenius_sq(const Eigen::MatrixXd& W) { return W.squaredNorm(); }

}  // namespace specpts
