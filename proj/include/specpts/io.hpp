#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "specpts/geometry.hpp"
#include "specpts/lattice.hpp"
#include "specpts/optimize.hpp"
#include "specpts/spectral.hpp"
#include "specpts/weights.hpp"

namespace specpts {

using json = nlohmann::json;

/// PointConfig <-> {"manifold": ..., "points": [[...], ...]} with full double
/// precision. Manifolds: {"kind":"sphere","dim":d} or
/// {"kind":"torus","basis":[[b00,b01],[b10,b11]]} (columns are the periods).
json manifold_to_json(const ManifoldSpec& manifold);
ManifoldSpec manifold_from_json(const json& j);
json config_to_json(const PointConfig& config);
PointConfig config_from_json(const json& j);

/// Kernel spec: {"family":"exp","alpha":2.0}, {"family":"oneminusexp",...},
/// {"family":"invpow","s":0.5}, {"family":"neglog"}.
json weight_to_json(const WeightFunction& f);
WeightFunction weight_from_json(const json& j);
/// Compact CLI form: "exp:2", "oneminusexp:2", "invpow:0.5", "neglog".
WeightFunction parse_weight(const std::string& token);

/// Invariant tokens: trace, frob2, lambda2, lambdamax, rtot, cond, var,
/// interval(lo,hi).
InvariantId parse_invariant(const std::string& token);
std::string invariant_token(const InvariantId& id);

/// Shortest representation that round-trips the double exactly.
std::string format_double(double x);

std::string csv_contour(const std::vector<SweepNode>& nodes);  // a,b,value
std::string csv_dos(const DoSHistogram& hist);                 // bin_center,mass

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

std::uint64_t fnv1a_hash(const std::string& data);

}  // namespace specpts
