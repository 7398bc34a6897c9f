#pragma once

#include <stdexcept>
#include <string>

namespace specpts {

/// A kernel singular at zero was evaluated on a coincident pair.
struct ZeroDistanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An invariant that needs lambda_2 > 0 was asked for on a disconnected graph.
struct DisconnectedGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetricMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lattice-sum truncation cannot reach the requested tail tolerance.
struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad experiment configuration (unknown key, wrong type, out-of-range value).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace specpts
