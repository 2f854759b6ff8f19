#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gpfsched/channel.hpp"
#include "gpfsched/grid.hpp"

namespace gpfsched {

// Binary U x B decision matrix; get(u, b) == true means RB b goes to UE u.
class AllocationMatrix {
 public:
  AllocationMatrix() = default;
  AllocationMatrix(std::size_t num_ues, std::size_t num_rbs)
      : num_ues_(num_ues), num_rbs_(num_rbs), entries_(num_ues * num_rbs, 0) {}

  // rb_to_ue[b] == -1 leaves RB b unassigned.
  static AllocationMatrix from_assignment(std::span<const std::int32_t> rb_to_ue,
                                          std::size_t num_ues);

  std::size_t num_ues() const { return num_ues_; }
  std::size_t num_rbs() const { return num_rbs_; }

  bool get(std::size_t u, std::size_t b) const {
    return entries_[u * num_rbs_ + b] != 0;
  }
  void set(std::size_t u, std::size_t b, bool value) {
    entries_[u * num_rbs_ + b] = value ? 1 : 0;
  }

  std::span<const std::uint8_t> row(std::size_t u) const {
    return {entries_.data() + u * num_rbs_, num_rbs_};
  }

  bool operator==(const AllocationMatrix&) const = default;

 private:
  std::size_t num_ues_ = 0;
  std::size_t num_rbs_ = 0;
  std::vector<std::uint8_t> entries_;
};

// Instantaneous rate r_u(t) and its EWMA average R_u(t).
struct UeRateState {
  double instantaneous_bps = 0.0;
  double average_bps = 0.0;
  double ewma_epsilon = 0.9;
};

struct GpfParams {
  double alpha = 1.0;
  double average_floor_bps = 1.0;  // stands in for zero averages
};

// Shannon-model rate over the RBs selected in allocation_row; the SNR is
// flat across RBs. Throws std::invalid_argument on a length mismatch.
double instantaneous_rate(std::span<const std::uint8_t> allocation_row,
                          const ChannelState& channel, const ResourceGrid& grid);

// average' = eps * average + (1 - eps) * new_rate
UeRateState update_average_rate(const UeRateState& state, double new_rate_bps);

// sum_u r_u(t) / max(avg_u, floor)^alpha
double gpf_objective(const AllocationMatrix& x,
                     std::span<const ChannelState> channels,
                     std::span<const double> average_bps,
                     const ResourceGrid& grid, const GpfParams& params);

struct ConstraintReport {
  bool ok = true;
  // Offending (u, b) entries of RB columns claimed by more than one UE.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

// Per-RB exclusivity: every column sums to at most one.
ConstraintReport check_constraints(const AllocationMatrix& x);

}  // namespace gpfsched
