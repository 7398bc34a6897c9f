#pragma once

#include <string>
#include <vector>

#include "specpts/io.hpp"

namespace specpts {

/// One config-driven experiment run. `params` is schema-validated: unknown
/// keys are rejected, defaults fill the rest.
struct ExperimentOutcome {
  json summary;
  std::vector<std::string> files;  // artifact paths written under out_dir
};

/// Experiments: sphere-simplex, torus-opt, lattice-sweep, dos, moments,
/// interval, trajectory. Throws ValidationError for bad configs and
/// propagates numerical errors.
ExperimentOutcome run_experiment(const std::string& experiment,
                                 const json& params,
                                 const std::string& out_dir);

const std::vector<std::string>& experiment_names();

LatticeParams parse_lattice(const std::string& token);  // square|triangular|a,b

/// Spectrum of the equal-weight complete graph, used as the closed-form
/// reference at the regular simplex (Laplacian: {0, nw, ...}; adjacency:
/// {-w, ..., (n-1)w}).
Eigen::VectorXd complete_graph_spectrum(int n, double w, bool adjacency);

}  // namespace specpts
