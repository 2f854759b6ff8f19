#include "gpfsched/rate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpfsched {

AllocationMatrix AllocationMatrix::from_assignment(
    std::span<const std::int32_t> rb_to_ue, std::size_t num_ues) {
  AllocationMatrix x(num_ues, rb_to_ue.size());
  for (std::size_t b = 0; b < rb_to_ue.size(); ++b) {
    const std::int32_t u = rb_to_ue[b];
    if (u < 0) continue;
    if (static_cast<std::size_t>(u) >= num_ues) {
      throw std::out_of_range("assignment references UE " + std::to_string(u));
    }
    x.set(static_cast<std::size_t>(u), b, true);
  }
  return x;
}

double instantaneous_rate(std::span<const std::uint8_t> allocation_row,
                          const ChannelState& channel, const ResourceGrid& grid) {
  if (allocation_row.size() != grid.num_rbs()) {
    throw std::invalid_argument("allocation row length does not match the grid");
  }
  const double spectral_efficiency = std::log2(1.0 + channel.snr);
  double rate = 0.0;
  for (std::size_t b = 0; b < allocation_row.size(); ++b) {
    if (allocation_row[b]) rate += grid.bandwidth_of(b) * spectral_efficiency;
  }
  return rate;
}

UeRateState update_average_rate(const UeRateState& state, double new_rate_bps) {
  if (new_rate_bps < 0.0) throw std::invalid_argument("rate must be nonnegative");
  UeRateState next = state;
  next.instantaneous_bps = new_rate_bps;
  next.average_bps = state.ewma_epsilon * state.average_bps +
                     (1.0 - state.ewma_epsilon) * new_rate_bps;
  return next;
}

double gpf_objective(const AllocationMatrix& x,
                     std::span<const ChannelState> channels,
                     std::span<const double> average_bps,
                     const ResourceGrid& grid, const GpfParams& params) {
  if (channels.size() != x.num_ues() || average_bps.size() != x.num_ues()) {
    throw std::invalid_argument("per-UE input lengths do not match the matrix");
  }
  if (grid.num_rbs() != x.num_rbs()) {
    throw std::invalid_argument("grid size does not match the matrix");
  }
  double objective = 0.0;
  for (std::size_t u = 0; u < x.num_ues(); ++u) {
    const double rate = instantaneous_rate(x.row(u), channels[u], grid);
    const double denom =
        std::pow(std::max(average_bps[u], params.average_floor_bps), params.alpha);
    objective += rate / denom;
  }
  return objective;
}

ConstraintReport check_constraints(const AllocationMatrix& x) {
  ConstraintReport report;
  for (std::size_t b = 0; b < x.num_rbs(); ++b) {
    std::size_t owners = 0;
    for (std::size_t u = 0; u < x.num_ues(); ++u) {
      if (x.get(u, b)) ++owners;
    }
    if (owners > 1) {
      report.ok = false;
      for (std::size_t u = 0; u < x.num_ues(); ++u) {
        if (x.get(u, b)) report.violations.emplace_back(u, b);
      }
    }
  }
  return report;
}

}  // namespace gpfsched
