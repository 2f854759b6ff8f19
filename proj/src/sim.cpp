#include "gpfsched/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <utility>

#include <json.hpp>

#include "gpfsched/hnn.hpp"
#include "gpfsched/oracle.hpp"

namespace gpfsched::sim {

namespace {

constexpr double kAverageFloorBps = 1.0;

struct SlotSolution {
  std::vector<std::int32_t> rb_to_ue;
  AllocationMatrix allocation;
  std::size_t sweeps = 0;
  double energy = 0.0;
};

SlotSolution solve_slot(const SimulationConfig& cfg, const CellState& state,
                        std::span<const ChannelState> channels,
                        std::span<const double> averages, std::uint64_t slot) {
  const GpfParams params{state.alpha, kAverageFloorBps};
  const TieBreak tie{cfg.tie_rule, state.seed, slot};

  SlotSolution solution;
  if (cfg.solver == SolverKind::hnn) {
    hnn::HopfieldNetwork net =
        hnn::build_network(channels, averages, state.grid, params);
    hnn::SolveResult result = hnn::solve(net, 10, tie);
    if (!result.trace.converged) {
      throw SolverNonConvergence(slot, state.alpha, state.seed);
    }
    solution.rb_to_ue = std::move(result.rb_to_ue);
    solution.allocation = std::move(result.allocation);
    solution.sweeps = result.trace.sweep_count;
    solution.energy = result.trace.energy_series.back();
    return solution;
  }

  const GainMatrix gains =
      build_gain_matrix(channels, averages, state.grid, params);
  oracle::AllocationResult result =
      cfg.solver == SolverKind::greedy
          ? oracle::greedy_gpf(gains, tie)
          : oracle::exhaustive_allocate(gains);
  // The energy column is a property of the final allocation, so the
  // single-pass solvers report the certified sweep count and the same
  // energy evaluation the network solver records.
  hnn::HopfieldNetwork net = hnn::network_from_gains(gains);
  for (std::size_t b = 0; b < net.num_rbs; ++b) {
    if (result.rb_to_ue[b] >= 0) {
      net.set_state(static_cast<std::size_t>(result.rb_to_ue[b]), b, true);
    }
  }
  solution.rb_to_ue = std::move(result.rb_to_ue);
  solution.allocation = std::move(result.allocation);
  solution.sweeps = hnn::kConvergedSweeps;
  solution.energy = hnn::energy(net);
  return solution;
}

SummaryStats stats_of(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  SummaryStats stats;
  stats.min = samples.front();
  stats.max = samples.back();
  const std::size_t n = samples.size();
  stats.median = n % 2 == 1 ? samples[n / 2]
                            : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
  return stats;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

SolverNonConvergence::SolverNonConvergence(std::uint64_t slot_, double alpha_,
                                           std::uint64_t seed_)
    : std::runtime_error("solver failed to converge at slot " +
                         std::to_string(slot_) + " (alpha=" +
                         std::to_string(alpha_) + ", seed=" +
                         std::to_string(seed_) + ")"),
      slot(slot_),
      alpha(alpha_),
      seed(seed_) {}

CellState make_cell_state(const SimulationConfig& cfg, double alpha,
                          std::uint64_t seed) {
  CellState state;
  state.grid = make_grid(cfg);
  state.placements = place_ues(cfg.num_ues, cfg.cell_radius_m, seed,
                               cfg.min_distance_m, cfg.tx_power_w);
  state.rates.assign(cfg.num_ues,
                     UeRateState{0.0, kAverageFloorBps, cfg.ewma_epsilon});
  state.alpha = alpha;
  state.seed = seed;
  return state;
}

SlotRecord run_slot(CellState& state, const SimulationConfig& cfg,
                    std::uint64_t slot) {
  const ChannelModel model{cfg.pathloss_exponent, cfg.ref_distance_m,
                           cfg.noise_power_w, cfg.total_bandwidth_hz,
                           cfg.static_channel};

  std::vector<ChannelState> channels;
  channels.reserve(cfg.num_ues);
  std::vector<double> averages;
  averages.reserve(cfg.num_ues);
  for (std::size_t u = 0; u < cfg.num_ues; ++u) {
    channels.push_back(sample_gain(model, state.placements[u], slot, state.seed));
    averages.push_back(state.rates[u].average_bps);
  }

  const SlotSolution solution = solve_slot(cfg, state, channels, averages, slot);
  if (const auto report = check_constraints(solution.allocation); !report.ok) {
    throw std::logic_error("allocation violates per-RB exclusivity at slot " +
                           std::to_string(slot));
  }

  SlotRecord record;
  record.slot = slot;
  record.alpha = state.alpha;
  record.seed = state.seed;
  record.sweeps = solution.sweeps;
  record.energy = solution.energy;
  record.ue_rate_bps.resize(cfg.num_ues);
  record.ue_avg_bps.resize(cfg.num_ues);
  for (std::size_t u = 0; u < cfg.num_ues; ++u) {
    const double rate =
        instantaneous_rate(solution.allocation.row(u), channels[u], state.grid);
    state.rates[u] = update_average_rate(state.rates[u], rate);
    record.ue_rate_bps[u] = rate;
    record.ue_avg_bps[u] = state.rates[u].average_bps;
  }
  record.sum_rate_bps = metrics::sum_rate_bps(record.ue_rate_bps);

  bool any_average = false;
  for (double avg : record.ue_avg_bps) any_average |= avg > 0.0;
  record.fairness = any_average ? metrics::jains_index(record.ue_avg_bps) : 1.0;
  return record;
}

CellResult run_cell(const SimulationConfig& cfg, double alpha,
                    std::uint64_t seed) {
  CellState state = make_cell_state(cfg, alpha, seed);
  CellResult cell{alpha, seed, {}};
  cell.records.reserve(cfg.num_slots);
  for (std::uint64_t slot = 0; slot < cfg.num_slots; ++slot) {
    cell.records.push_back(run_slot(state, cfg, slot));
  }
  return cell;
}

std::size_t warmup_slot_count(const SimulationConfig& cfg) {
  const auto warmup = static_cast<std::size_t>(
      cfg.warmup_fraction * static_cast<double>(cfg.num_slots));
  return std::min(warmup, cfg.num_slots - 1);
}

RunArtifact run_experiment(const SimulationConfig& cfg, Exec cell_exec) {
  if (const auto errors = validate_config(cfg); !errors.empty()) {
    std::string joined = "invalid config:";
    for (const auto& error : errors) joined += "\n  " + error;
    throw std::invalid_argument(joined);
  }

  struct CellPlan {
    double alpha;
    std::uint64_t seed;
  };
  std::vector<CellPlan> plan;
  for (double alpha : cfg.gpf_alpha) {
    for (std::uint64_t seed : cfg.seeds) plan.push_back({alpha, seed});
  }

  RunArtifact artifact;
  artifact.config = cfg;
  artifact.cells.resize(plan.size());

  // Cells are independent replications; the channel streams are keyed by
  // (seed, ue, slot), so execution order cannot change any result.
  std::vector<std::exception_ptr> failures(plan.size());
  const std::int64_t num_cells = static_cast<std::int64_t>(plan.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cell_exec == Exec::parallel)
#endif
  for (std::int64_t i = 0; i < num_cells; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      artifact.cells[idx] = run_cell(cfg, plan[idx].alpha, plan[idx].seed);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  const std::size_t warmup = warmup_slot_count(cfg);
  for (double alpha : cfg.gpf_alpha) {
    AlphaSummary summary;
    summary.alpha = alpha;
    summary.num_slots = cfg.num_slots;
    summary.warmup_slots = warmup;
    summary.seeds = cfg.seeds;

    std::vector<double> fairness_samples;
    std::vector<double> sum_rate_samples;
    for (const auto& cell : artifact.cells) {
      if (cell.alpha != alpha) continue;
      for (std::size_t t = warmup; t < cell.records.size(); ++t) {
        fairness_samples.push_back(cell.records[t].fairness);
        sum_rate_samples.push_back(
            metrics::bps_to_mbps(cell.records[t].sum_rate_bps));
      }
    }
    summary.fairness = stats_of(fairness_samples);
    summary.sum_rate_mbps = stats_of(sum_rate_samples);
    summary.sum_rate_ecdf_mbps = metrics::ecdf(std::move(sum_rate_samples));
    artifact.summaries.push_back(std::move(summary));
  }
  return artifact;
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string slots_csv(const RunArtifact& artifact) {
  const std::size_t num_ues = artifact.config.num_ues;
  std::string out = "slot,alpha,seed,sum_rate_bps,fairness,sweeps,energy";
  for (std::size_t u = 0; u < num_ues; ++u) {
    out += ",ue" + std::to_string(u) + "_rate_bps";
  }
  for (std::size_t u = 0; u < num_ues; ++u) {
    out += ",ue" + std::to_string(u) + "_avg_bps";
  }
  out += "\n";

  for (const auto& cell : artifact.cells) {
    for (const auto& record : cell.records) {
      out += std::to_string(record.slot);
      out += "," + format_double(record.alpha);
      out += "," + std::to_string(record.seed);
      out += "," + format_double(record.sum_rate_bps);
      out += "," + format_double(record.fairness);
      out += "," + std::to_string(record.sweeps);
      out += "," + format_double(record.energy);
      for (double rate : record.ue_rate_bps) out += "," + format_double(rate);
      for (double avg : record.ue_avg_bps) out += "," + format_double(avg);
      out += "\n";
    }
  }
  return out;
}

std::string summary_json(const RunArtifact& artifact) {
  nlohmann::json root = nlohmann::json::object();
  for (const auto& summary : artifact.summaries) {
    nlohmann::json entry;
    entry["fairness"] = {{"min", summary.fairness.min},
                         {"median", summary.fairness.median},
                         {"max", summary.fairness.max}};
    entry["sum_rate_mbps"] = {{"min", summary.sum_rate_mbps.min},
                              {"median", summary.sum_rate_mbps.median},
                              {"max", summary.sum_rate_mbps.max}};
    entry["num_slots"] = summary.num_slots;
    entry["warmup_slots"] = summary.warmup_slots;
    entry["seeds"] = summary.seeds;
    root[format_double(summary.alpha)] = std::move(entry);
  }
  return root.dump(2) + "\n";
}

std::string ecdf_csv(const RunArtifact& artifact) {
  std::string out = "alpha,value_mbps,cum_prob\n";
  for (const auto& summary : artifact.summaries) {
    for (const auto& point : summary.sum_rate_ecdf_mbps.points) {
      out += format_double(summary.alpha);
      out += "," + format_double(point.value);
      out += "," + format_double(point.cumulative_probability);
      out += "\n";
    }
  }
  return out;
}

void emit_results(const RunArtifact& artifact,
                  const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory " +
                             out_dir.string() + ": " + ec.message());
  }
  write_file(out_dir / "slots.csv", slots_csv(artifact));
  write_file(out_dir / "summary.json", summary_json(artifact));
  write_file(out_dir / "ecdf.csv", ecdf_csv(artifact));
}

}  // namespace gpfsched::sim
