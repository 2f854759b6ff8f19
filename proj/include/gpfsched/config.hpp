#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gpfsched/grid.hpp"
#include "gpfsched/kernels.hpp"

namespace gpfsched {

enum class SolverKind { hnn, greedy, exhaustive };

// Either a uniform grid at spacing_hz over num_rbs, or explicit
// (spacing, count) blocks whose counts must sum to num_rbs.
struct NumerologySpec {
  double spacing_hz = 15e3;
  std::vector<std::pair<double, std::size_t>> blocks;  // empty => uniform

  bool uniform() const { return blocks.empty(); }
};

struct SimulationConfig {
  std::size_t num_ues = 10;
  std::size_t num_rbs = 100;
  NumerologySpec numerology;
  double total_bandwidth_hz = 18e6;
  double cell_radius_m = 15.0;  // keeps every UE in the high-SNR regime
  double pathloss_exponent = 3.0;
  double ref_distance_m = 1.0;
  double min_distance_m = 10.0;
  double tx_power_w = 1.0;
  double noise_power_w = 5.5556e-14;  // ~30 dB SNR at the 10 m floor, F = 18 MHz
  double ewma_epsilon = 0.9;
  std::vector<double> gpf_alpha = {0.2, 1.0};
  std::size_t num_slots = 1000;
  double warmup_fraction = 0.1;
  std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  TieRule tie_rule = TieRule::lowest_index;
  SolverKind solver = SolverKind::hnn;
  bool static_channel = false;
};

// Parses the flat "key = value" document into cfg. Unknown and duplicate
// keys are errors. Returns every problem found, not only the first.
std::vector<std::string> parse_config(std::string_view text, SimulationConfig& cfg);

// Cross-field validation; returns every violation.
std::vector<std::string> validate_config(const SimulationConfig& cfg);

// Reads, parses, and validates. File-level failures come back as errors too.
std::vector<std::string> load_config_file(const std::filesystem::path& path,
                                          SimulationConfig& cfg);

ResourceGrid make_grid(const SimulationConfig& cfg);

std::string solver_name(SolverKind solver);
std::string tie_rule_name(TieRule rule);

}  // namespace gpfsched
