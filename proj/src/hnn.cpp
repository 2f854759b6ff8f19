#include "gpfsched/hnn.hpp"

#include <stdexcept>
#include <utility>

namespace gpfsched::hnn {

namespace {

void check_neuron(const HopfieldNetwork& net, std::size_t u, std::size_t b) {
  if (u >= net.num_users || b >= net.num_rbs) {
    throw std::out_of_range("neuron index outside the network");
  }
}

}  // namespace

double HopfieldNetwork::weight(std::size_t u, std::size_t b, std::size_t i,
                               std::size_t j) const {
  check_neuron(*this, u, b);
  check_neuron(*this, i, j);
  return (u == i && b == j) ? self_weights.at(u, b) : 0.0;
}

AllocationMatrix HopfieldNetwork::allocation() const {
  AllocationMatrix x(num_users, num_rbs);
  for (std::size_t u = 0; u < num_users; ++u) {
    for (std::size_t b = 0; b < num_rbs; ++b) {
      x.set(u, b, fired(u, b));
    }
  }
  return x;
}

int delta(const HopfieldNetwork& net, std::size_t u, std::size_t b,
          std::size_t i, std::size_t j) {
  check_neuron(net, u, b);
  check_neuron(net, i, j);
  return (u == i && b == j) ? 1 : 0;
}

HopfieldNetwork network_from_gains(GainMatrix gains) {
  HopfieldNetwork net;
  net.num_users = gains.num_ues();
  net.num_rbs = gains.num_rbs();
  net.self_weights = std::move(gains);
  net.thresholds.assign(net.num_users * net.num_rbs, 0.0);
  net.state.assign(net.num_users * net.num_rbs, 0);
  return net;
}

HopfieldNetwork build_network(std::span<const ChannelState> channels,
                              std::span<const double> average_bps,
                              const ResourceGrid& grid, const GpfParams& params,
                              Exec exec) {
  return network_from_gains(
      build_gain_matrix(channels, average_bps, grid, params, exec));
}

double energy(const HopfieldNetwork& net) {
  // With the diagonal weights the quadratic term collapses to the fired
  // self-weights (v binary, v^2 = v).
  double quadratic = 0.0;
  double linear = 0.0;
  for (std::size_t u = 0; u < net.num_users; ++u) {
    for (std::size_t b = 0; b < net.num_rbs; ++b) {
      if (net.fired(u, b)) {
        quadratic += net.self_weights.at(u, b);
        linear += net.threshold(u, b);
      }
    }
  }
  return -0.5 * quadratic + linear;
}

bool generic_update(HopfieldNetwork& net, std::size_t u, std::size_t b) {
  check_neuron(net, u, b);
  const double input = net.self_weights.at(u, b) * (net.fired(u, b) ? 1.0 : 0.0);
  const bool fires = input >= net.threshold(u, b);
  net.set_state(u, b, fires);
  return fires;
}

double activation(const HopfieldNetwork& net, std::size_t u, std::size_t b,
                  std::span<const std::uint8_t> candidate_state) {
  check_neuron(net, u, b);
  if (candidate_state.size() != net.num_users * net.num_rbs) {
    throw std::invalid_argument("candidate state size does not match the network");
  }
  const double own = candidate_state[u * net.num_rbs + b] ? 1.0 : 0.0;
  return net.self_weights.at(u, b) * own - net.threshold(u, b);
}

double candidate_activation(const HopfieldNetwork& net, std::size_t u,
                            std::size_t b) {
  check_neuron(net, u, b);
  return net.self_weights.at(u, b) - net.threshold(u, b);
}

namespace {

// Activations with every candidate bit taken as firing; the winner-take-all
// rule compares these per column.
GainMatrix candidate_activations(const HopfieldNetwork& net) {
  GainMatrix y(net.num_users, net.num_rbs);
  for (std::size_t u = 0; u < net.num_users; ++u) {
    for (std::size_t b = 0; b < net.num_rbs; ++b) {
      y.at(u, b) = net.self_weights.at(u, b) - net.threshold(u, b);
    }
  }
  return y;
}

void apply_assignment(HopfieldNetwork& net, std::span<const std::int32_t> rb_to_ue) {
  for (std::size_t b = 0; b < net.num_rbs; ++b) {
    for (std::size_t u = 0; u < net.num_users; ++u) {
      net.set_state(u, b, static_cast<std::int32_t>(u) == rb_to_ue[b]);
    }
  }
}

}  // namespace

double winner_take_all_sweep(HopfieldNetwork& net, const TieBreak& tie, Exec exec) {
  const GainMatrix y = candidate_activations(net);
  const auto rb_to_ue = exec == Exec::parallel
                            ? kernels::wta_assign_parallel(y, tie)
                            : kernels::wta_assign_serial(y, tie);
  apply_assignment(net, rb_to_ue);
  return energy(net);
}

SolveResult solve(HopfieldNetwork& net, std::size_t max_sweeps,
                  const TieBreak& tie, Exec exec) {
  if (max_sweeps == 0) throw std::invalid_argument("max_sweeps must be at least 1");

  SolveResult result;
  std::vector<std::uint8_t> previous = net.state;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    result.trace.energy_series.push_back(winner_take_all_sweep(net, tie, exec));
    ++result.trace.sweep_count;
    if (net.state == previous) {
      result.trace.converged = true;
      break;
    }
    previous = net.state;
  }

  result.rb_to_ue.assign(net.num_rbs, -1);
  for (std::size_t b = 0; b < net.num_rbs; ++b) {
    for (std::size_t u = 0; u < net.num_users; ++u) {
      if (net.fired(u, b)) {
        result.rb_to_ue[b] = static_cast<std::int32_t>(u);
        break;
      }
    }
  }
  result.allocation = net.allocation();
  for (std::size_t b = 0; b < net.num_rbs; ++b) {
    if (result.rb_to_ue[b] >= 0) {
      result.objective +=
          net.self_weights.at(static_cast<std::size_t>(result.rb_to_ue[b]), b);
    }
  }
  return result;
}

}  // namespace gpfsched::hnn
