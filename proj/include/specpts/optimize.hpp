#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specpts/gradients.hpp"

namespace specpts {

struct OptimizeSettings {
  int max_iterations = 2000;
  double grad_tol = 1e-8;       // projected gradient norm on spheres
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  int restarts = 1;
  std::uint64_t seed = 0;
  int snapshot_stride = 0;      // 0 disables snapshots
  int plateau_window = 25;
  double plateau_rel = 1e-12;   // relative decrease over the window
};

enum class StopReason { GradientNorm, Plateau, LineSearchFailure, MaxIterations };

const char* stop_reason_name(StopReason reason);

struct RunResult {
  PointConfig config;
  double objective = 0.0;        // invariant value at the final iterate
  double d_min = 0.0;            // NaN on spheres
  double min_distance = 0.0;     // smallest pairwise distance
  int iterations = 0;
  bool converged = false;        // gradient norm reached grad_tol
  StopReason reason = StopReason::MaxIterations;
  std::vector<std::pair<int, PointConfig>> snapshots;
};

/// Quasi-Newton descent of the invariant (ascent for Sense::Maximize).
/// Armijo backtracking only; the inverse-Hessian approximation is reset to
/// the identity whenever the curvature condition s'y > 1e-12 fails. Torus
/// coordinates are wrapped and sphere points renormalized every iterate.
RunResult bfgs_minimize(const PointConfig& initial, const WeightFunction& f,
                        const InvariantId& id, const OptimizeSettings& settings);

struct MultiStartResult {
  RunResult best;
  int best_index = 0;
  std::vector<RunResult> runs;
};

/// Independent runs from random configurations with per-run seeds
/// seed + index; restarts run concurrently. Best = lowest objective
/// (highest for Sense::Maximize), ties to the lowest index.
MultiStartResult multi_start(const ManifoldSpec& manifold, int n,
                             const WeightFunction& f, const InvariantId& id,
                             const OptimizeSettings& settings);

/// Triangular nearest-neighbor spacing at the torus density minus the
/// configuration's smallest pairwise distance; near zero iff the
/// configuration is locally triangular. NaN on spheres.
double d_min(const PointConfig& config);

/// W x H rectangle torus with W*H = n and H = W*sqrt(3)/2 (unit density).
ManifoldSpec unit_density_canvas(int n);

/// Exact triangular lattice of q*q points on the unit-density canvas
/// (q even so the rows close up periodically).
PointConfig triangular_config(int q);

}  // namespace specpts
