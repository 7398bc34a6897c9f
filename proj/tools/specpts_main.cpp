#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "specpts/errors.hpp"
#include "specpts/experiments.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

specpts::json eigen_version() {
  return std::to_string(EIGEN_WORLD_VERSION) + "." +
         std::to_string(EIGEN_MAJOR_VERSION) + "." +
         std::to_string(EIGEN_MINOR_VERSION);
}

void write_manifest(const std::string& out_dir, const std::string& experiment,
                    const specpts::json& params, const std::string& status,
                    const std::string& failure_stage,
                    const std::vector<std::string>& files) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) return;  // nowhere to put it
  const specpts::json config{{"experiment", experiment}, {"params", params}};
  specpts::json manifest{
      {"tool", "specpts"},
      {"version", kVersion},
      {"eigen", eigen_version()},
      {"experiment", experiment},
      {"params", params},
      {"config_hash", specpts::fnv1a_hash(config.dump())},
      {"seed", params.value("seed", std::uint64_t{1})},
      {"status", status},
      {"outputs", files}};
  if (!failure_stage.empty()) manifest["failure_stage"] = failure_stage;
  try {
    specpts::write_text_file((fs::path(out_dir) / "manifest.json").string(),
                             manifest.dump(2) + "\n");
  } catch (...) {
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral pointset-configuration experiments"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "run one experiment");
  std::string experiment, config_path, out_dir = "specpts-out";
  run->add_option("experiment", experiment, "experiment name");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--out", out_dir, "output directory");

  // union of per-experiment options; schema validation rejects misuse
  std::optional<int> n, dim, restarts, maxiter, stride, N, M, bins;
  std::optional<std::uint64_t> seed;
  std::optional<double> gradtol, a_lo, a_hi, b_lo, b_hi, center, width, jitter;
  std::optional<std::string> f, objective, grid, lattice;
  bool maximize = false;
  run->add_option("--n", n, "number of points");
  run->add_option("--dim", dim, "sphere ambient dimension");
  run->add_option("--f", f, "kernel, e.g. exp:2");
  run->add_option("--objective", objective, "invariant token");
  run->add_flag("--maximize", maximize, "maximize instead of minimize");
  run->add_option("--restarts", restarts, "number of random restarts");
  run->add_option("--seed", seed, "base RNG seed");
  run->add_option("--maxiter", maxiter, "iteration cap");
  run->add_option("--gradtol", gradtol, "gradient-norm tolerance");
  run->add_option("--stride", stride, "snapshot stride");
  run->add_option("--N", N, "torus graph size (N^2 sites)");
  run->add_option("--grid", grid, "sweep grid, e.g. 41x41");
  run->add_option("--a_lo", a_lo, "sweep a lower bound");
  run->add_option("--a_hi", a_hi, "sweep a upper bound");
  run->add_option("--b_lo", b_lo, "sweep b lower bound");
  run->add_option("--b_hi", b_hi, "sweep b upper bound");
  run->add_option("--lattice", lattice, "square | triangular | a,b");
  run->add_option("--M", M, "dual-cell quadrature grid");
  run->add_option("--bins", bins, "histogram bins");
  run->add_option("--center", center, "target interval center");
  run->add_option("--width", width, "target interval width");
  run->add_option("--jitter", jitter, "triangular-init jitter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  specpts::json params = specpts::json::object();
  try {
    if (!config_path.empty()) {
      specpts::json file;
      try {
        file = specpts::json::parse(specpts::read_text_file(config_path));
      } catch (const std::exception& e) {
        throw specpts::ValidationError(std::string("bad config file: ") +
                                       e.what());
      }
      if (!file.is_object() || !file.contains("experiment"))
        throw specpts::ValidationError(
            "config file must be an object with an 'experiment' key");
      experiment = file.at("experiment").get<std::string>();
      file.erase("experiment");
      params = std::move(file);
    }
    if (experiment.empty())
      throw specpts::ValidationError("no experiment given (flag or --config)");

    auto put = [&](const char* key, const auto& opt) {
      if (opt) params[key] = *opt;
    };
    put("n", n), put("dim", dim), put("restarts", restarts);
    put("maxiter", maxiter), put("stride", stride), put("N", N), put("M", M);
    put("bins", bins), put("seed", seed), put("gradtol", gradtol);
    put("a_lo", a_lo), put("a_hi", a_hi), put("b_lo", b_lo), put("b_hi", b_hi);
    put("center", center), put("width", width), put("jitter", jitter);
    put("f", f), put("objective", objective), put("grid", grid);
    put("lattice", lattice);
    if (maximize) params["maximize"] = true;
  } catch (const specpts::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    write_manifest(out_dir, experiment, params, "validation-error", e.what(), {});
    return 2;
  }

  try {
    const specpts::ExperimentOutcome outcome =
        specpts::run_experiment(experiment, params, out_dir);
    write_manifest(out_dir, experiment, params, "success", "", outcome.files);
    std::printf("%s\n", outcome.summary.dump(2).c_str());
    std::printf("wrote %zu files to %s\n", outcome.files.size(),
                out_dir.c_str());
    return 0;
  } catch (const specpts::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    write_manifest(out_dir, experiment, params, "validation-error", e.what(), {});
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    write_manifest(out_dir, experiment, params, "numerical-failure", e.what(),
                   {});
    return 3;
  }
}
