#include "specpts/optimize.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "specpts/parallel.hpp"

namespace specpts {

namespace {

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  Eigen::VectorXd v(m.size());
  int k = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) v[k++] = m(i, c);
  return v;
}

void unflatten_into(const Eigen::VectorXd& v, Eigen::MatrixXd& m) {
  int k = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) m(i, c) = v[k++];
}

PointConfig step_to(const PointConfig& base, const Eigen::VectorXd& x) {
  PointConfig next = base;
  unflatten_into(x, next.points);
  canonicalize(next);
  return next;
}

}  // namespace

const char* stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::GradientNorm:
      return "gradient-norm";
    case StopReason::Plateau:
      return "plateau";
    case StopReason::LineSearchFailure:
      return "line-search-failure";
    case StopReason::MaxIterations:
      return "max-iterations";
  }
  return "?";
}

RunResult bfgs_minimize(const PointConfig& initial, const WeightFunction& f,
                        const InvariantId& id,
                        const OptimizeSettings& settings) {
  if (settings.grad_tol <= 0 || settings.backtrack <= 0 ||
      settings.backtrack >= 1)
    throw std::invalid_argument("bad optimizer settings");

  const double sense = id.sense == Sense::Maximize ? -1.0 : 1.0;
  const bool on_sphere = is_sphere(initial.manifold);
  const int m = initial.size() * initial.dim();

  PointConfig current = initial;
  canonicalize(current);

  auto eval = [&](const PointConfig& c) {
    ObjectiveEvaluation e = objective_with_gradient(c, f, id);
    e.value *= sense;
    e.gradient *= sense;
    return e;
  };
  auto value_at = [&](const PointConfig& c) {
    return sense * objective_value(c, f, id);
  };

  RunResult result;
  auto snapshot = [&](int iter, const PointConfig& c) {
    if (settings.snapshot_stride > 0 && iter % settings.snapshot_stride == 0)
      result.snapshots.emplace_back(iter, c);
  };

  ObjectiveEvaluation e = eval(current);
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(m, m);
  std::deque<double> recent = {e.value};
  StopReason reason = StopReason::MaxIterations;
  int iter = 0;
  snapshot(0, current);

  for (; iter < settings.max_iterations; ++iter) {
    Eigen::VectorXd g = flatten(e.gradient);
    if (g.norm() <= settings.grad_tol) {
      reason = StopReason::GradientNorm;
      break;
    }

    Eigen::VectorXd p = -(H * g);
    double slope = g.dot(p);
    if (!(slope < 0)) {  // not a descent direction; fall back to steepest
      H.setIdentity();
      p = -g;
      slope = g.dot(p);
    }

    const Eigen::VectorXd x0 = flatten(current.points);
    double t = 1.0;
    PointConfig trial;
    ObjectiveEvaluation et;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      trial = step_to(current, x0 + t * p);
      const double ft = value_at(trial);
      if (ft <= e.value + settings.armijo_c * t * slope) {
        et = eval(trial);
        accepted = true;
        break;
      }
      t *= settings.backtrack;
    }
    if (!accepted) {
      reason = StopReason::LineSearchFailure;
      break;
    }

    // Torus wrapping only changes the cell representative, so the true step
    // is t*p; on the sphere use the post-retraction difference.
    const Eigen::VectorXd s =
        on_sphere ? (flatten(trial.points) - x0).eval() : (t * p).eval();
    const Eigen::VectorXd y = flatten(et.gradient) - g;
    const double sy = s.dot(y);
    if (sy > 1e-12) {
      const double rho = 1.0 / sy;
      const Eigen::VectorXd Hy = H * y;
      H -= rho * (s * Hy.transpose() + Hy * s.transpose());
      H += rho * rho * (y.dot(Hy) + sy) * (s * s.transpose());
    } else {
      H.setIdentity();
    }

    current = trial;
    e = et;
    snapshot(iter + 1, current);

    recent.push_back(e.value);
    if (static_cast<int>(recent.size()) > settings.plateau_window + 1)
      recent.pop_front();
    if (static_cast<int>(recent.size()) == settings.plateau_window + 1) {
      const double drop = recent.front() - recent.back();
      if (drop <= settings.plateau_rel * std::max(1.0, std::abs(recent.back()))) {
        reason = StopReason::Plateau;
        ++iter;
        break;
      }
    }
  }

  result.config = current;
  result.objective = sense * e.value;
  result.min_distance = min_pair_distance(current);
  result.d_min = d_min(current);
  result.iterations = iter;
  result.reason = reason;
  result.converged = reason == StopReason::GradientNorm;
  if (settings.snapshot_stride > 0 &&
      (result.snapshots.empty() || result.snapshots.back().first != iter))
    result.snapshots.emplace_back(iter, current);
  return result;
}

MultiStartResult multi_start(const ManifoldSpec& manifold, int n,
                             const WeightFunction& f, const InvariantId& id,
                             const OptimizeSettings& settings) {
  if (settings.restarts < 1)
    throw std::invalid_argument("multi_start needs restarts >= 1");
  MultiStartResult out;
  out.runs.resize(settings.restarts);
  parallel_for(0, settings.restarts, [&](int r) {
    const PointConfig init =
        random_config(manifold, n, settings.seed + std::uint64_t(r));
    out.runs[r] = bfgs_minimize(init, f, id, settings);
  });
  out.best_index = 0;
  for (int r = 1; r < settings.restarts; ++r) {
    const bool better = id.sense == Sense::Maximize
                            ? out.runs[r].objective > out.runs[out.best_index].objective
                            : out.runs[r].objective < out.runs[out.best_index].objective;
    if (better) out.best_index = r;
  }
  out.best = out.runs[out.best_index];
  return out;
}

double d_min(const PointConfig& config) {
  if (!is_torus(config.manifold))
    return std::numeric_limits<double>::quiet_NaN();
  const double area = std::abs(torus_basis(config.manifold).determinant());
  const double spacing =
      std::sqrt(2.0 * area / (std::sqrt(3.0) * config.size()));
  return spacing - min_pair_distance(config);
}

ManifoldSpec unit_density_canvas(int n) {
  if (n < 2) throw std::invalid_argument("canvas needs n >= 2");
  const double width = std::sqrt(2.0 * n / std::sqrt(3.0));
  Eigen::Matrix2d basis;
  basis << width, 0.0, 0.0, width * std::sqrt(3.0) / 2.0;
  return FlatTorus{basis};
}

PointConfig triangular_config(int q) {
  if (q < 2 || q % 2 != 0)
    throw std::invalid_argument("triangular_config needs even q >= 2");
  const int n = q * q;
  const ManifoldSpec manifold = unit_density_canvas(n);
  const double spacing = std::sqrt(2.0 / std::sqrt(3.0));
  PointConfig config;
  config.manifold = manifold;
  config.points.resize(n, 2);
  int k = 0;
  for (int row = 0; row < q; ++row) {
    for (int col = 0; col < q; ++col) {
      config.points(k, 0) = (col + 0.5 * (row % 2)) * spacing;
      config.points(k, 1) = row * spacing * std::sqrt(3.0) / 2.0;
      ++k;
    }
  }
  canonicalize(config);
  return config;
}

}  // namespace specpts
