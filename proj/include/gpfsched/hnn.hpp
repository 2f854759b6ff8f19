#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gpfsched/kernels.hpp"
#include "gpfsched/rate.hpp"

namespace gpfsched::hnn {

// One slot's allocation problem as a 2-D binary Hopfield network. Neuron
// (u, b) firing means RB b is assigned to UE u. The derived weight matrix
// is diagonal: only the self terms w((u,b),(u,b)) are nonzero, so the
// network stores just those plus the thresholds and the state.
struct HopfieldNetwork {
  std::size_t num_users = 0;
  std::size_t num_rbs = 0;
  GainMatrix self_weights;
  std::vector<double> thresholds;   // row-major U x B; all zero on build
  std::vector<std::uint8_t> state;  // row-major U x B binary neuron states

  double threshold(std::size_t u, std::size_t b) const {
    return thresholds[u * num_rbs + b];
  }
  double& threshold(std::size_t u, std::size_t b) {
    return thresholds[u * num_rbs + b];
  }
  bool fired(std::size_t u, std::size_t b) const {
    return state[u * num_rbs + b] != 0;
  }
  void set_state(std::size_t u, std::size_t b, bool v) {
    state[u * num_rbs + b] = v ? 1 : 0;
  }

  // Full 4-index connection weight; symmetric by construction.
  double weight(std::size_t u, std::size_t b, std::size_t i, std::size_t j) const;

  AllocationMatrix allocation() const;
};

// Kronecker delta over neuron indices: 1 iff u == i and b == j.
// Throws std::out_of_range when an index is outside the network.
int delta(const HopfieldNetwork& net, std::size_t u, std::size_t b,
          std::size_t i, std::size_t j);

// Weights from the GPF per-neuron coefficients, thresholds all zero,
// state all zeros.
HopfieldNetwork build_network(std::span<const ChannelState> channels,
                              std::span<const double> average_bps,
                              const ResourceGrid& grid, const GpfParams& params,
                              Exec exec = Exec::serial);

HopfieldNetwork network_from_gains(GainMatrix gains);

// E(v) = -1/2 sum w v v + sum theta v over the current state.
double energy(const HopfieldNetwork& net);

// Threshold update of one neuron from the current state; returns the new
// bit. Kept for validating energy descent of the unmodified rule; the
// scheduler itself uses the winner-take-all sweep.
bool generic_update(HopfieldNetwork& net, std::size_t u, std::size_t b);

// Activation y_ub evaluated over an arbitrary candidate state.
double activation(const HopfieldNetwork& net, std::size_t u, std::size_t b,
                  std::span<const std::uint8_t> candidate_state);

// Activation with the candidate neuron's own bit taken as firing; with the
// diagonal weights this equals self_weight(u, b) - threshold(u, b).
double candidate_activation(const HopfieldNetwork& net, std::size_t u,
                            std::size_t b);

struct UpdateTrace {
  std::size_t sweep_count = 0;
  std::vector<double> energy_series;  // energy after each full sweep
  bool converged = false;
};

// A stable allocation certifies in one assignment sweep plus one
// confirmation sweep, so a converged trace has sweep_count == 2.
inline constexpr std::size_t kConvergedSweeps = 2;

// One winner-take-all pass: every RB column fires exactly the neuron with
// the maximal activation. Returns the energy after the sweep.
double winner_take_all_sweep(HopfieldNetwork& net, const TieBreak& tie = {},
                             Exec exec = Exec::serial);

struct SolveResult {
  AllocationMatrix allocation;
  std::vector<std::int32_t> rb_to_ue;
  double objective = 0.0;  // selected self-weights summed in column order
  UpdateTrace trace;
};

// Repeats winner-take-all sweeps until the state repeats exactly or
// max_sweeps is reached. Throws std::invalid_argument if max_sweeps == 0.
SolveResult solve(HopfieldNetwork& net, std::size_t max_sweeps = 10,
                  const TieBreak& tie = {}, Exec exec = Exec::serial);

}  // namespace gpfsched::hnn
