#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpfsched/config.hpp"
#include "gpfsched/sim.hpp"

namespace {

constexpr const char* kVersion = "gpfsched 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitConfigInvalid = 2;
constexpr int kExitNonConvergence = 3;

void print_errors(const std::vector<std::string>& errors) {
  for (const auto& error : errors) {
    std::fprintf(stderr, "error: %s\n", error.c_str());
  }
}

struct RunOptions {
  std::string config_path;
  std::string out_dir;
  std::vector<double> alphas;
  std::vector<std::uint64_t> seeds;
  std::string solver;
  std::uint64_t slots = 0;
  bool has_slots = false;
};

int do_run(const RunOptions& opts) {
  gpfsched::SimulationConfig cfg;
  auto errors = gpfsched::load_config_file(opts.config_path, cfg);
  if (!errors.empty()) {
    print_errors(errors);
    return kExitConfigInvalid;
  }

  // Flags override config keys.
  if (!opts.alphas.empty()) cfg.gpf_alpha = opts.alphas;
  if (!opts.seeds.empty()) cfg.seeds = opts.seeds;
  if (!opts.solver.empty()) {
    if (opts.solver == "hnn") {
      cfg.solver = gpfsched::SolverKind::hnn;
    } else if (opts.solver == "greedy") {
      cfg.solver = gpfsched::SolverKind::greedy;
    } else if (opts.solver == "exhaustive") {
      cfg.solver = gpfsched::SolverKind::exhaustive;
    } else {
      std::fprintf(stderr, "error: unknown solver '%s'\n", opts.solver.c_str());
      return kExitConfigInvalid;
    }
  }
  if (opts.has_slots) cfg.num_slots = opts.slots;

  errors = gpfsched::validate_config(cfg);
  if (!errors.empty()) {
    print_errors(errors);
    return kExitConfigInvalid;
  }

  try {
    const auto artifact = gpfsched::sim::run_experiment(cfg);
    gpfsched::sim::emit_results(artifact, opts.out_dir);
  } catch (const gpfsched::sim::SolverNonConvergence& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNonConvergence;
  }
  return kExitOk;
}

int do_validate(const std::string& config_path) {
  gpfsched::SimulationConfig cfg;
  const auto errors = gpfsched::load_config_file(config_path, cfg);
  if (!errors.empty()) {
    print_errors(errors);
    return kExitConfigInvalid;
  }
  std::printf("config ok: %zu UEs, %zu RBs, %zu alpha value(s), %zu seed(s)\n",
              cfg.num_ues, cfg.num_rbs, cfg.gpf_alpha.size(), cfg.seeds.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GPF downlink resource-block scheduling simulator"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run an experiment and emit result files");
  run->add_option("--config", run_opts.config_path, "Config file path")->required();
  run->add_option("--out", run_opts.out_dir, "Output directory")->required();
  run->add_option("--alpha", run_opts.alphas, "GPF alpha sweep (overrides config)")
      ->delimiter(',');
  run->add_option("--seeds", run_opts.seeds, "Seed list (overrides config)")
      ->delimiter(',');
  run->add_option("--solver", run_opts.solver, "hnn | greedy | exhaustive");
  auto* slots_opt =
      run->add_option("--slots", run_opts.slots, "Slot count (overrides config)");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a config file");
  validate->add_option("--config", validate_path, "Config file path")->required();

  auto* version = app.add_subcommand("version", "Print the version");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      run_opts.has_slots = slots_opt->count() > 0;
      return do_run(run_opts);
    }
    if (validate->parsed()) return do_validate(validate_path);
    if (version->parsed()) {
      std::printf("%s\n", kVersion);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
