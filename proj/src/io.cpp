#include "specpts/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "specpts/errors.hpp"

namespace specpts {

json manifold_to_json(const ManifoldSpec& manifold) {
  if (is_sphere(manifold))
    return json{{"kind", "sphere"}, {"dim", ambient_dimension(manifold)}};
  const Eigen::Matrix2d& basis = torus_basis(manifold);
  return json{{"kind", "torus"},
              {"basis",
               {{basis(0, 0), basis(0, 1)}, {basis(1, 0), basis(1, 1)}}}};
}

ManifoldSpec manifold_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "sphere") {
    const int dim = j.at("dim").get<int>();
    if (dim < 2) throw ValidationError("sphere dim must be >= 2");
    return Sphere{dim};
  }
  if (kind == "torus") {
    const auto& rows = j.at("basis");
    if (!rows.is_array() || rows.size() != 2 || rows[0].size() != 2 ||
        rows[1].size() != 2)
      throw ValidationError("torus basis must be a 2x2 matrix");
    Eigen::Matrix2d basis;
    basis << rows[0][0].get<double>(), rows[0][1].get<double>(),
        rows[1][0].get<double>(), rows[1][1].get<double>();
    if (basis.determinant() == 0.0)
      throw ValidationError("torus basis must be nonsingular");
    return FlatTorus{basis};
  }
  throw ValidationError("unknown manifold kind: " + kind);
}

json config_to_json(const PointConfig& config) {
  json points = json::array();
  for (int i = 0; i < config.size(); ++i) {
    json row = json::array();
    for (int c = 0; c < config.dim(); ++c) row.push_back(config.points(i, c));
    points.push_back(std::move(row));
  }
  return json{{"manifold", manifold_to_json(config.manifold)},
              {"points", std::move(points)}};
}

PointConfig config_from_json(const json& j) {
  PointConfig config;
  config.manifold = manifold_from_json(j.at("manifold"));
  const auto& points = j.at("points");
  if (!points.is_array() || points.empty())
    throw ValidationError("points must be a non-empty array");
  const int n = static_cast<int>(points.size());
  const int d = ambient_dimension(config.manifold);
  config.points.resize(n, d);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(points[i].size()) != d)
      throw ValidationError("point row has wrong dimension");
    for (int c = 0; c < d; ++c) config.points(i, c) = points[i][c].get<double>();
  }
  return config;
}

json weight_to_json(const WeightFunction& f) {
  switch (f.family()) {
    case WeightFamily::ExpDecay:
      return json{{"family", "exp"}, {"alpha", f.param()}};
    case WeightFamily::OneMinusExp:
      return json{{"family", "oneminusexp"}, {"alpha", f.param()}};
    case WeightFamily::InversePower:
      return json{{"family", "invpow"}, {"s", f.param()}};
    case WeightFamily::NegLog:
      return json{{"family", "neglog"}};
  }
  throw ValidationError("unknown weight family");
}

WeightFunction weight_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  try {
    if (family == "exp") return WeightFunction::exp_decay(j.at("alpha").get<double>());
    if (family == "oneminusexp")
      return WeightFunction::one_minus_exp(j.at("alpha").get<double>());
    if (family == "invpow")
      return WeightFunction::inverse_power(j.at("s").get<double>());
    if (family == "neglog") return WeightFunction::neg_log();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  throw ValidationError("unknown weight family: " + family);
}

WeightFunction parse_weight(const std::string& token) {
  const auto colon = token.find(':');
  const std::string family = token.substr(0, colon);
  try {
    if (family == "neglog") return WeightFunction::neg_log();
    if (colon == std::string::npos)
      throw ValidationError("kernel needs a parameter: " + token);
    const double param = std::stod(token.substr(colon + 1));
    if (family == "exp") return WeightFunction::exp_decay(param);
    if (family == "oneminusexp") return WeightFunction::one_minus_exp(param);
    if (family == "invpow") return WeightFunction::inverse_power(param);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("bad kernel spec '") + token + "': " +
                          e.what());
  }
  throw ValidationError("unknown kernel family in '" + token + "'");
}

InvariantId parse_invariant(const std::string& token) {
  if (token == "trace") return InvariantId::of(Invariant::TraceL);
  if (token == "frob2") return InvariantId::of(Invariant::FrobeniusSqW);
  if (token == "lambda2") return InvariantId::of(Invariant::Lambda2);
  if (token == "lambdamax") return InvariantId::of(Invariant::LambdaMax);
  if (token == "rtot") return InvariantId::of(Invariant::RTot);
  if (token == "cond") return InvariantId::of(Invariant::CondNumber);
  if (token == "var") return InvariantId::of(Invariant::Variance);
  if (token.rfind("interval(", 0) == 0 && token.back() == ')') {
    const std::string body = token.substr(9, token.size() - 10);
    const auto comma = body.find(',');
    if (comma == std::string::npos)
      throw ValidationError("interval needs two endpoints: " + token);
    try {
      const double lo = std::stod(body.substr(0, comma));
      const double hi = std::stod(body.substr(comma + 1));
      return InvariantId::interval(lo, hi);
    } catch (const std::invalid_argument&) {
      throw ValidationError("bad interval endpoints in '" + token + "'");
    }
  }
  throw ValidationError("unknown invariant '" + token + "'");
}

std::string invariant_token(const InvariantId& id) {
  switch (id.kind) {
    case Invariant::TraceL:
      return "trace";
    case Invariant::FrobeniusSqW:
      return "frob2";
    case Invariant::Lambda2:
      return "lambda2";
    case Invariant::LambdaMax:
      return "lambdamax";
    case Invariant::RTot:
      return "rtot";
    case Invariant::CondNumber:
      return "cond";
    case Invariant::Variance:
      return "var";
    case Invariant::IntervalDist:
      return "interval(" + format_double(id.interval_lo) + "," +
             format_double(id.interval_hi) + ")";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_contour(const std::vector<SweepNode>& nodes) {
  std::string out = "a,b,value\n";
  for (const auto& node : nodes) {
    out += format_double(node.a);
    out += ',';
    out += format_double(node.b);
    out += ',';
    out += format_double(node.value);
    out += '\n';
  }
  return out;
}

std::string csv_dos(const DoSHistogram& hist) {
  std::string out = "bin_center,mass\n";
  for (int b = 0; b < hist.centers.size(); ++b) {
    out += format_double(hist.centers[b]);
    out += ',';
    out += format_double(hist.mass[b]);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t fnv1a_hash(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace specpts
