#include "specpts/gradients.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace specpts {

namespace {

double sign0(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

constexpr double kRepeatGap = 1e-9;

/// Accumulates grad_i += coef(i,j) * f'(d2_ij) * disp_ij over all pairs,
/// using the antisymmetry disp_ji = -disp_ij.
Eigen::MatrixXd accumulate_pair_gradient(
    const PointConfig& config, const WeightFunction& f,
    const std::function<double(int, int)>& coef) {
  const int n = config.size();
  const int d = config.dim();
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const PairGeometry pg = pair_geometry(config, i, j);
      const Eigen::VectorXd term =
          coef(i, j) * f.deriv(pg.d2) * pg.displacement;
      grad.row(i) += term.transpose();
      grad.row(j) -= term.transpose();
    }
  }
  return grad;
}

}  // namespace

Eigen::VectorXd invariant_gradient(const Eigen::VectorXd& spectrum,
                                   const InvariantId& id) {
  const int n = static_cast<int>(spectrum.size());
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  switch (id.kind) {
    case Invariant::TraceL:
      g.setOnes();
      break;
    case Invariant::FrobeniusSqW:
      g = 2.0 * spectrum;
      break;
    case Invariant::Lambda2:
      g[1] = 1.0;
      break;
    case Invariant::LambdaMax:
      g[n - 1] = 1.0;
      break;
    case Invariant::RTot:
      for (int i = 1; i < n; ++i)
        g[i] = -double(n) / (spectrum[i] * spectrum[i]);
      break;
    case Invariant::CondNumber:
      g[n - 1] = 1.0 / spectrum[1];
      g[1] += -spectrum[n - 1] / (spectrum[1] * spectrum[1]);
      break;
    case Invariant::Variance: {
      const double mean = spectrum.mean();
      for (int i = 0; i < n; ++i) g[i] = (2.0 * spectrum[i] - 2.0 * mean) / n;
      break;
    }
    case Invariant::IntervalDist:
      for (int i = 0; i < n; ++i)
        g[i] = sign0(spectrum[i] - id.interval_lo) +
               sign0(spectrum[i] - id.interval_hi);
      break;
  }
  return g;
}

bool targeted_eigenvalue_repeated(const Eigen::VectorXd& spectrum,
                                  const InvariantId& id) {
  const int n = static_cast<int>(spectrum.size());
  auto gap_at = [&](int i) {
    double gap = std::numeric_limits<double>::infinity();
    if (i > 0) gap = std::min(gap, spectrum[i] - spectrum[i - 1]);
    if (i + 1 < n) gap = std::min(gap, spectrum[i + 1] - spectrum[i]);
    return gap;
  };
  switch (id.kind) {
    case Invariant::Lambda2:
      return gap_at(1) < kRepeatGap;
    case Invariant::LambdaMax:
      return gap_at(n - 1) < kRepeatGap;
    case Invariant::CondNumber:
      return gap_at(1) < kRepeatGap || gap_at(n - 1) < kRepeatGap;
    default:
      return false;  // rules smooth in every eigenvalue
  }
}

namespace {

ConfigGradient positions_gradient(const PointConfig& config,
                                  const WeightFunction& f,
                                  const InvariantId& id,
                                  const EigenPairs& pairs, bool laplacian) {
  const Eigen::VectorXd dJ = invariant_gradient(pairs.values, id);
  const Eigen::MatrixXd V =
      pairs.vectors * dJ.asDiagonal() * pairs.vectors.transpose();
  ConfigGradient out;
  out.degenerate = targeted_eigenvalue_repeated(pairs.values, id);
  if (laplacian) {
    out.ambient = accumulate_pair_gradient(config, f, [&](int i, int j) {
      return 2.0 * (V(j, j) - 2.0 * V(i, j) + V(i, i));
    });
  } else {
    out.ambient = accumulate_pair_gradient(
        config, f, [&](int i, int j) { return 4.0 * V(i, j); });
  }
  return out;
}

}  // namespace

ConfigGradient grad_positions_W(const PointConfig& config,
                                const WeightFunction& f, const InvariantId& id,
                                const EigenPairs& adjacency_pairs) {
  return positions_gradient(config, f, id, adjacency_pairs, false);
}

ConfigGradient grad_positions_L(const PointConfig& config,
                                const WeightFunction& f, const InvariantId& id,
                                const EigenPairs& laplacian_pairs) {
  return positions_gradient(config, f, id, laplacian_pairs, true);
}

EdgeGradient grad_edge_weights(const InvariantId& id,
                               const EigenPairs& laplacian_pairs,
                               const Eigen::MatrixXd& incidence) {
  const Eigen::VectorXd dJ = invariant_gradient(laplacian_pairs.values, id);
  const Eigen::MatrixXd BU = incidence * laplacian_pairs.vectors;
  EdgeGradient out;
  out.values = BU.array().square().matrix() * dJ;
  out.degenerate = targeted_eigenvalue_repeated(laplacian_pairs.values, id);
  return out;
}

Eigen::MatrixXd tangent_project_rows(const PointConfig& config,
                                     const Eigen::MatrixXd& ambient) {
  Eigen::MatrixXd projected = ambient;
  for (int i = 0; i < config.size(); ++i) {
    const Eigen::VectorXd x = config.points.row(i).transpose();
    projected.row(i) =
        sphere_tangent_project(x, ambient.row(i).transpose()).transpose();
  }
  return projected;
}

double objective_value(const PointConfig& config, const WeightFunction& f,
                       const InvariantId& id) {
  // Trace and squared Frobenius norm are plain kernel sums; no eigensolve.
  if (id.kind == Invariant::TraceL) return 2.0 * weight_vector(config, f).sum();
  if (id.kind == Invariant::FrobeniusSqW)
    return 2.0 * weight_vector(config, f).squaredNorm();
  const WeightedGraph g = assemble(config, f);
  return invariant(sym_eigenvalues(g.laplacian), id);
}

ObjectiveEvaluation objective_with_gradient(const PointConfig& config,
                                            const WeightFunction& f,
                                            const InvariantId& id) {
  ObjectiveEvaluation out;
  if (id.kind == Invariant::TraceL) {
    // V = Id, so the eigensolve drops out.
    out.value = 2.0 * weight_vector(config, f).sum();
    out.gradient = accumulate_pair_gradient(config, f,
                                            [](int, int) { return 4.0; });
  } else if (id.kind == Invariant::FrobeniusSqW) {
    // J = sum mu^2 gives V = 2 W directly.
    const WeightedGraph g = assemble(config, f);
    out.value = 2.0 * g.weights.squaredNorm();
    out.gradient = accumulate_pair_gradient(config, f, [&](int i, int j) {
      return 8.0 * g.adjacency(i, j);
    });
  } else {
    const WeightedGraph g = assemble(config, f);
    const EigenPairs pairs = sym_eigen(g.laplacian);
    out.value = invariant(pairs.values, id);
    ConfigGradient cg = grad_positions_L(config, f, id, pairs);
    out.gradient = std::move(cg.ambient);
    out.degenerate = cg.degenerate;
  }
  if (is_sphere(config.manifold))
    out.gradient = tangent_project_rows(config, out.gradient);
  return out;
}

FdReport fd_check(const PointConfig& config, const WeightFunction& f,
                  const InvariantId& id, double h) {
  if (h < 1e-7 || h > 1e-3)
    throw std::invalid_argument("fd_check step outside [1e-7, 1e-3]");
  const ObjectiveEvaluation eval = objective_with_gradient(config, f, id);
  const bool on_sphere = is_sphere(config.manifold);
  const int n = config.size();
  const int d = config.dim();

  Eigen::MatrixXd fd(n, d);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < d; ++c) {
      PointConfig plus = config;
      PointConfig minus = config;
      plus.points(i, c) += h;
      minus.points(i, c) -= h;
      if (on_sphere) {
        // Retract so the perturbed curve stays on the sphere; the central
        // difference then equals the tangent-projected derivative.
        plus.points.row(i) /= plus.points.row(i).norm();
        minus.points.row(i) /= minus.points.row(i).norm();
      }
      fd(i, c) =
          (objective_value(plus, f, id) - objective_value(minus, f, id)) /
          (2.0 * h);
    }
  }

  const double scale = std::max({eval.gradient.cwiseAbs().maxCoeff(),
                                 fd.cwiseAbs().maxCoeff(), 1e-300});
  FdReport report;
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < d; ++c) {
      const double err = std::abs(eval.gradient(i, c) - fd(i, c)) / scale;
      if (err >= report.max_rel_err) {
        report.max_rel_err = err;
        report.point = i;
        report.coord = c;
        report.analytic = eval.gradient(i, c);
        report.fd = fd(i, c);
      }
    }
  }
  return report;
}

}  // namespace specpts
