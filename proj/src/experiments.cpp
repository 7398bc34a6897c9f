#include "specpts/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>

#include "specpts/errors.hpp"

namespace specpts {

namespace {

namespace fs = std::filesystem;

struct ParamSpec {
  enum Type { Num, Int, Str, Bool };
  const char* key;
  Type type;
};

void validate_params(const json& params,
                     std::initializer_list<ParamSpec> allowed) {
  if (!params.is_object()) throw ValidationError("params must be an object");
  for (const auto& [key, value] : params.items()) {
    const ParamSpec* spec = nullptr;
    for (const auto& candidate : allowed)
      if (key == candidate.key) spec = &candidate;
    if (!spec) throw ValidationError("unknown config key '" + key + "'");
    bool ok = false;
    switch (spec->type) {
      case ParamSpec::Num:
        ok = value.is_number();
        break;
      case ParamSpec::Int:
        ok = value.is_number_integer();
        break;
      case ParamSpec::Str:
        ok = value.is_string();
        break;
      case ParamSpec::Bool:
        ok = value.is_boolean();
        break;
    }
    if (!ok) throw ValidationError("config key '" + key + "' has wrong type");
  }
}

OptimizeSettings settings_from(const json& params, int default_restarts,
                               int default_maxiter = 2000) {
  OptimizeSettings settings;
  settings.max_iterations = params.value("maxiter", default_maxiter);
  settings.grad_tol = params.value("gradtol", settings.grad_tol);
  settings.restarts = params.value("restarts", default_restarts);
  settings.seed = params.value("seed", std::uint64_t{1});
  settings.snapshot_stride = params.value("stride", 0);
  if (settings.max_iterations < 1 || settings.restarts < 1)
    throw ValidationError("maxiter and restarts must be >= 1");
  return settings;
}

std::string save_json(const std::string& out_dir, const std::string& name,
                      const json& j) {
  const std::string path = (fs::path(out_dir) / name).string();
  write_text_file(path, j.dump(2) + "\n");
  return path;
}

std::string save_text(const std::string& out_dir, const std::string& name,
                      const std::string& content) {
  const std::string path = (fs::path(out_dir) / name).string();
  write_text_file(path, content);
  return path;
}

json run_to_json(const RunResult& run) {
  json j{{"objective", run.objective},
         {"min_distance", run.min_distance},
         {"iterations", run.iterations},
         {"converged", run.converged},
         {"stop_reason", stop_reason_name(run.reason)}};
  if (std::isfinite(run.d_min)) j["d_min"] = run.d_min;
  return j;
}

void save_snapshots(const RunResult& run, int run_index,
                    const std::string& out_dir, ExperimentOutcome& outcome) {
  for (const auto& [iter, config] : run.snapshots) {
    const std::string name =
        "run" + std::to_string(run_index) + "_iter" + std::to_string(iter) +
        ".json";
    outcome.files.push_back(save_json(out_dir, name, config_to_json(config)));
  }
}

ExperimentOutcome run_sphere_simplex(const json& params,
                                     const std::string& out_dir) {
  validate_params(params, {{"n", ParamSpec::Int},
                           {"dim", ParamSpec::Int},
                           {"f", ParamSpec::Str},
                           {"objective", ParamSpec::Str},
                           {"maximize", ParamSpec::Bool},
                           {"restarts", ParamSpec::Int},
                           {"seed", ParamSpec::Int},
                           {"maxiter", ParamSpec::Int},
                           {"gradtol", ParamSpec::Num}});
  const int n = params.value("n", 4);
  if (n < 3) throw ValidationError("sphere-simplex needs n >= 3");
  const int dim = params.value("dim", n - 1);
  if (dim < n - 1)
    throw ValidationError("an n-point simplex needs ambient dim >= n-1");
  const std::string objective = params.value("objective", "trace");
  InvariantId id = parse_invariant(objective);
  const bool default_max = id.kind == Invariant::Lambda2;
  id.sense = params.value("maximize", default_max) ? Sense::Maximize
                                                   : Sense::Minimize;
  const bool concave_default =
      id.kind == Invariant::RTot || id.kind == Invariant::Lambda2;
  const WeightFunction f = parse_weight(
      params.value("f", concave_default ? "oneminusexp:2" : "exp:2"));

  OptimizeSettings settings = settings_from(params, 8);
  const MultiStartResult result =
      multi_start(Sphere{dim}, n, f, id, settings);

  const double simplex_d2 = 2.0 * n / (n - 1.0);
  const Eigen::VectorXd d2 = all_pair_distances_sq(result.best.config);
  const double max_dev = (d2.array() - simplex_d2).abs().maxCoeff();
  const double closed_form = invariant(
      complete_graph_spectrum(n, f(simplex_d2), uses_adjacency(id)), id);
  const bool pass = max_dev < 1e-5 &&
                    std::abs(result.best.objective - closed_form) <=
                        1e-8 * std::max(1.0, std::abs(closed_form));

  ExperimentOutcome outcome;
  outcome.summary = {{"experiment", "sphere-simplex"},
                     {"n", n},
                     {"dim", dim},
                     {"f", f.label()},
                     {"objective", invariant_token(id)},
                     {"sense", id.sense == Sense::Maximize ? "maximize" : "minimize"},
                     {"best_objective", result.best.objective},
                     {"closed_form", closed_form},
                     {"simplex_d2", simplex_d2},
                     {"max_dev_d2", max_dev},
                     {"pass", pass},
                     {"best_run", run_to_json(result.best)}};
  outcome.files.push_back(save_json(out_dir, "best_config.json",
                                    config_to_json(result.best.config)));
  outcome.files.push_back(save_json(out_dir, "summary.json", outcome.summary));
  return outcome;
}

ExperimentOutcome run_torus_opt(const json& params, const std::string& out_dir,
                                bool trajectory) {
  validate_params(params, {{"n", ParamSpec::Int},
                           {"f", ParamSpec::Str},
                           {"objective", ParamSpec::Str},
                           {"maximize", ParamSpec::Bool},
                           {"restarts", ParamSpec::Int},
                           {"seed", ParamSpec::Int},
                           {"maxiter", ParamSpec::Int},
                           {"gradtol", ParamSpec::Num},
                           {"stride", ParamSpec::Int}});
  const int n = params.value("n", 100);
  if (n < 2) throw ValidationError("needs n >= 2");
  InvariantId id =
      parse_invariant(params.value("objective", trajectory ? "rtot" : "trace"));
  if (params.value("maximize", false)) id.sense = Sense::Maximize;
  const WeightFunction f = parse_weight(params.value("f", "exp:2"));

  OptimizeSettings settings = settings_from(params, trajectory ? 1 : 10,
                                            trajectory ? 400 : 2000);
  if (trajectory && settings.snapshot_stride == 0) settings.snapshot_stride = 10;

  const ManifoldSpec canvas = unit_density_canvas(n);
  const MultiStartResult result = multi_start(canvas, n, f, id, settings);

  ExperimentOutcome outcome;
  json runs = json::array();
  for (const auto& run : result.runs) runs.push_back(run_to_json(run));
  outcome.summary = {{"experiment", trajectory ? "trajectory" : "torus-opt"},
                     {"n", n},
                     {"f", f.label()},
                     {"objective", invariant_token(id)},
                     {"restarts", settings.restarts},
                     {"seed", settings.seed},
                     {"best_index", result.best_index},
                     {"best", run_to_json(result.best)},
                     {"runs", runs}};
  if (trajectory) {
    // mean nearest-neighbor distance per snapshot, the coalescence readout
    json series = json::array();
    for (const auto& [iter, config] : result.best.snapshots) {
      double acc = 0.0;
      for (int i = 0; i < config.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int j = 0; j < config.size(); ++j)
          if (j != i)
            nearest = std::min(nearest, pair_geometry(config, i, j).d2);
        acc += std::sqrt(nearest);
      }
      series.push_back({{"iter", iter}, {"mean_nn_distance", acc / config.size()}});
    }
    outcome.summary["mean_nn_series"] = std::move(series);
  }
  for (int r = 0; r < static_cast<int>(result.runs.size()); ++r)
    save_snapshots(result.runs[r], r, out_dir, outcome);
  outcome.files.push_back(save_json(out_dir, "best_config.json",
                                    config_to_json(result.best.config)));
  outcome.files.push_back(save_json(out_dir, "summary.json", outcome.summary));
  return outcome;
}

std::pair<int, int> parse_grid(const std::string& token) {
  const auto x = token.find('x');
  if (x == std::string::npos)
    throw ValidationError("grid must look like 41x41");
  try {
    const int na = std::stoi(token.substr(0, x));
    const int nb = std::stoi(token.substr(x + 1));
    if (na < 2 || nb < 2) throw ValidationError("grid must be at least 2x2");
    return {na, nb};
  } catch (const std::invalid_argument&) {
    throw ValidationError("bad grid spec '" + token + "'");
  }
}

ExperimentOutcome run_lattice_sweep(const json& params,
                                    const std::string& out_dir) {
  validate_params(params, {{"objective", ParamSpec::Str},
                           {"f", ParamSpec::Str},
                           {"N", ParamSpec::Int},
                           {"grid", ParamSpec::Str},
                           {"a_lo", ParamSpec::Num},
                           {"a_hi", ParamSpec::Num},
                           {"b_lo", ParamSpec::Num},
                           {"b_hi", ParamSpec::Num}});
  const std::string objective = params.value("objective", "trace");
  const bool reciprocal = objective == "invlambda2";
  const InvariantId id =
      parse_invariant(reciprocal ? "lambda2" : objective);
  const WeightFunction f = parse_weight(params.value("f", "exp:2"));
  const int N = params.value("N", 10);

  SweepGrid grid;
  std::tie(grid.na, grid.nb) = parse_grid(params.value("grid", "41x41"));
  grid.a_lo = params.value("a_lo", grid.a_lo);
  grid.a_hi = params.value("a_hi", grid.a_hi);
  grid.b_lo = params.value("b_lo", grid.b_lo);
  grid.b_hi = params.value("b_hi", grid.b_hi);

  const std::vector<SweepNode> nodes =
      sweep_fundamental_domain(id, reciprocal, f, N, grid);
  const auto argmin =
      std::min_element(nodes.begin(), nodes.end(),
                       [](const SweepNode& x, const SweepNode& y) {
                         return x.value < y.value;
                       });

  ExperimentOutcome outcome;
  outcome.summary = {{"experiment", "lattice-sweep"},
                     {"objective", objective},
                     {"f", f.label()},
                     {"N", N},
                     {"nodes", static_cast<int>(nodes.size())}};
  if (argmin != nodes.end())
    outcome.summary["argmin"] = {
        {"a", argmin->a}, {"b", argmin->b}, {"value", argmin->value}};
  outcome.files.push_back(save_text(out_dir, "sweep.csv", csv_contour(nodes)));
  outcome.files.push_back(save_json(out_dir, "summary.json", outcome.summary));
  return outcome;
}

ExperimentOutcome run_dos(const json& params, const std::string& out_dir) {
  validate_params(params, {{"lattice", ParamSpec::Str},
                           {"f", ParamSpec::Str},
                           {"M", ParamSpec::Int},
                           {"bins", ParamSpec::Int}});
  const LatticeParams lp = parse_lattice(params.value("lattice", "triangular"));
  const WeightFunction f = parse_weight(params.value("f", "exp:2"));
  const int M = params.value("M", 256);
  const int bins = params.value("bins", 128);
  if (M < 64) throw ValidationError("dos needs M >= 64");

  const DoSHistogram hist = dos(basis_from_params(lp.a, lp.b), f, M, bins);
  const int peak = van_hove_bin(hist);

  ExperimentOutcome outcome;
  outcome.summary = {{"experiment", "dos"},
                     {"lattice", {{"a", lp.a}, {"b", lp.b}}},
                     {"f", f.label()},
                     {"M", M},
                     {"bins", bins},
                     {"total_mass", hist.total_mass},
                     {"spectrum_lo", hist.lo},
                     {"spectrum_hi", hist.hi},
                     {"peak_center", hist.centers[peak]},
                     {"peak_mass", hist.mass[peak]}};
  outcome.files.push_back(save_text(out_dir, "dos.csv", csv_dos(hist)));
  outcome.files.push_back(save_json(out_dir, "summary.json", outcome.summary));
  return outcome;
}

ExperimentOutcome run_moments(const json& params, const std::string& out_dir) {
  validate_params(params, {{"lattice", ParamSpec::Str},
                           {"f", ParamSpec::Str},
                           {"M", ParamSpec::Int}});
  const LatticeParams lp = parse_lattice(params.value("lattice", "triangular"));
  const WeightFunction f = parse_weight(params.value("f", "exp:2"));
  const int M = params.value("M", 256);
  const Eigen::Matrix2d basis = basis_from_params(lp.a, lp.b);

  json table = json::array();
  std::string csv = "moment,closed,quadrature\n";
  for (int p = 0; p <= 2; ++p) {
    const double closed = moment_w_closed(basis, f, p);
    const double quad = moment_w_quadrature(basis, f, p, M);
    table.push_back({{"p", p}, {"closed", closed}, {"quadrature", quad}});
    csv += "w" + std::to_string(p) + "," + format_double(closed) + "," +
           format_double(quad) + "\n";
  }
  const double l1_closed = moment_l1_closed(basis, f);
  const double l1_quad = moment_l1_quadrature(basis, f, M);
  csv += "l1," + format_double(l1_closed) + "," + format_double(l1_quad) + "\n";

  ExperimentOutcome outcome;
  outcome.summary = {{"experiment", "moments"},
                     {"lattice", {{"a", lp.a}, {"b", lp.b}}},
                     {"f", f.label()},
                     {"M", M},
                     {"operator_norm", operator_norm(basis, f)},
                     {"adjacency_moments", table},
                     {"laplacian_m1",
                      {{"closed", l1_closed}, {"quadrature", l1_quad}}}};
  outcome.files.push_back(save_text(out_dir, "moments.csv", csv));
  outcome.files.push_back(save_json(out_dir, "summary.json", outcome.summary));
  return outcome;
}

ExperimentOutcome run_interval(const json& params, const std::string& out_dir) {
  validate_params(params, {{"center", ParamSpec::Num},
                           {"width", ParamSpec::Num},
                           {"n", ParamSpec::Int},
                           {"f", ParamSpec::Str},
                           {"restarts", ParamSpec::Int},
                           {"seed", ParamSpec::Int},
                           {"jitter", ParamSpec::Num},
                           {"maxiter", ParamSpec::Int},
                           {"gradtol", ParamSpec::Num}});
  const double center = params.value("center", 0.85);
  const double width = params.value("width", 0.06);
  if (width <= 0) throw ValidationError("interval width must be > 0");
  const int n = params.value("n", 100);
  const int q = static_cast<int>(std::lround(std::sqrt(double(n))));
  if (q * q != n || q % 2 != 0)
    throw ValidationError("interval experiment needs n = q^2 with q even");
  const WeightFunction f = parse_weight(params.value("f", "exp:2"));
  const double jitter = params.value("jitter", 1e-4);

  const InvariantId id =
      InvariantId::interval(center - width / 2.0, center + width / 2.0);
  OptimizeSettings settings = settings_from(params, 10);

  // reference: the exact triangular lattice on the unit-density canvas
  const PointConfig triangular = triangular_config(q);
  const double triangular_objective = objective_value(triangular, f, id);

  // descent from the (slightly jittered) triangular configuration; the exact
  // lattice is a critical point by translation symmetry
  PointConfig tri_init = triangular;
  {
    std::mt19937_64 rng(settings.seed);
    std::normal_distribution<double> gauss(0.0, jitter);
    const double spacing = std::sqrt(2.0 / std::sqrt(3.0));
    for (int i = 0; i < tri_init.size(); ++i)
      for (int c = 0; c < 2; ++c)
        tri_init.points(i, c) += spacing * gauss(rng);
    canonicalize(tri_init);
  }
  const RunResult tri_run = bfgs_minimize(tri_init, f, id, settings);

  const MultiStartResult multi =
      multi_start(tri_init.manifold, n, f, id, settings);

  const double gain =
      (triangular_objective - multi.best.objective) / triangular_objective;

  ExperimentOutcome outcome;
  json runs = json::array();
  for (const auto& run : multi.runs) runs.push_back(run_to_json(run));
  outcome.summary = {{"experiment", "interval"},
                     {"sigma_lo", id.interval_lo},
                     {"sigma_hi", id.interval_hi},
                     {"n", n},
                     {"f", f.label()},
                     {"jitter", jitter},
                     {"triangular_objective", triangular_objective},
                     {"triangular_run", run_to_json(tri_run)},
                     {"best", run_to_json(multi.best)},
                     {"best_gain_over_triangular", gain},
                     {"runs", runs}};
  outcome.files.push_back(save_json(out_dir, "triangular_run_config.json",
                                    config_to_json(tri_run.config)));
  outcome.files.push_back(save_json(out_dir, "best_config.json",
                                    config_to_json(multi.best.config)));
  outcome.files.push_back(save_json(out_dir, "summary.json", outcome.summary));
  return outcome;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "sphere-simplex", "torus-opt", "lattice-sweep", "dos",
      "moments",        "interval",  "trajectory"};
  return names;
}

LatticeParams parse_lattice(const std::string& token) {
  if (token == "square") return {0.0, 1.0};
  if (token == "triangular") return {0.5, kTriangularB};
  const auto comma = token.find(',');
  if (comma == std::string::npos)
    throw ValidationError("lattice must be square, triangular, or a,b");
  try {
    const double a = std::stod(token.substr(0, comma));
    const double b = std::stod(token.substr(comma + 1));
    if (b <= 0) throw ValidationError("lattice parameter b must be > 0");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw ValidationError("bad lattice spec '" + token + "'");
  }
}

Eigen::VectorXd complete_graph_spectrum(int n, double w, bool adjacency) {
  Eigen::VectorXd spectrum(n);
  if (adjacency) {
    spectrum.setConstant(-w);
    spectrum[n - 1] = (n - 1.0) * w;
  } else {
    spectrum.setConstant(n * w);
    spectrum[0] = 0.0;
  }
  return spectrum;
}

ExperimentOutcome run_experiment(const std::string& experiment,
                                 const json& params,
                                 const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ValidationError("cannot create output dir: " + out_dir);

  if (experiment == "sphere-simplex") return run_sphere_simplex(params, out_dir);
  if (experiment == "torus-opt") return run_torus_opt(params, out_dir, false);
  if (experiment == "trajectory") return run_torus_opt(params, out_dir, true);
  if (experiment == "lattice-sweep") return run_lattice_sweep(params, out_dir);
  if (experiment == "dos") return run_dos(params, out_dir);
  if (experiment == "moments") return run_moments(params, out_dir);
  if (experiment == "interval") return run_interval(params, out_dir);
  throw ValidationError("unknown experiment '" + experiment + "'");
}

}  // namespace specpts
