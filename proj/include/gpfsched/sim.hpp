#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpfsched/channel.hpp"
#include "gpfsched/config.hpp"
#include "gpfsched/grid.hpp"
#include "gpfsched/kernels.hpp"
#include "gpfsched/metrics.hpp"
#include "gpfsched/rate.hpp"

namespace gpfsched::sim {

struct SlotRecord {
  std::uint64_t slot = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> ue_rate_bps;  // instantaneous per UE
  std::vector<double> ue_avg_bps;   // EWMA per UE after the slot's update
  double sum_rate_bps = 0.0;
  double fairness = 0.0;  // Jain's index over the averages
  std::size_t sweeps = 0;
  double energy = 0.0;  // network energy of the final allocation
};

// One (alpha, seed) replication.
struct CellResult {
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::vector<SlotRecord> records;
};

struct SummaryStats {
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

struct AlphaSummary {
  double alpha = 0.0;
  SummaryStats fairness;       // pooled post-warmup slots, all seeds
  SummaryStats sum_rate_mbps;  // likewise
  std::size_t num_slots = 0;
  std::size_t warmup_slots = 0;
  std::vector<std::uint64_t> seeds;
  metrics::EcdfCurve sum_rate_ecdf_mbps;
};

struct RunArtifact {
  SimulationConfig config;
  std::vector<CellResult> cells;  // alpha-major, seeds in config order
  std::vector<AlphaSummary> summaries;
};

struct SolverNonConvergence : std::runtime_error {
  SolverNonConvergence(std::uint64_t slot, double alpha, std::uint64_t seed);
  std::uint64_t slot;
  double alpha;
  std::uint64_t seed;
};

// Mutable per-replication state threaded through the slot loop.
struct CellState {
  ResourceGrid grid;
  std::vector<UePlacement> placements;
  std::vector<UeRateState> rates;
  double alpha = 0.0;
  std::uint64_t seed = 0;
};

CellState make_cell_state(const SimulationConfig& cfg, double alpha,
                          std::uint64_t seed);

// Samples channels, solves the slot's allocation with the configured
// solver, checks feasibility, applies the rate updates, and records the
// slot metrics. Throws SolverNonConvergence if the solver fails to settle.
SlotRecord run_slot(CellState& state, const SimulationConfig& cfg,
                    std::uint64_t slot);

CellResult run_cell(const SimulationConfig& cfg, double alpha,
                    std::uint64_t seed);

std::size_t warmup_slot_count(const SimulationConfig& cfg);

// Runs every (alpha, seed) cell; cells are independent and run in parallel
// under Exec::parallel with identical results.
RunArtifact run_experiment(const SimulationConfig& cfg,
                           Exec cell_exec = Exec::parallel);

// Writes slots.csv, summary.json, and ecdf.csv under out_dir.
void emit_results(const RunArtifact& artifact,
                  const std::filesystem::path& out_dir);

// Serialization used by emit_results, exposed for tests and tools.
std::string slots_csv(const RunArtifact& artifact);
std::string summary_json(const RunArtifact& artifact);
std::string ecdf_csv(const RunArtifact& artifact);

// Shortest round-trip decimal form; locale-independent.
std::string format_double(double value);

}  // namespace gpfsched::sim
