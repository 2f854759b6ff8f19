#pragma once

#include <cstdint>
#include <vector>

#include "gpfsched/kernels.hpp"
#include "gpfsched/rate.hpp"

namespace gpfsched::oracle {

struct AllocationResult {
  AllocationMatrix allocation;
  std::vector<std::int32_t> rb_to_ue;  // -1 = unassigned
  double objective = 0.0;
};

inline constexpr std::uint64_t kDefaultSearchGuard = 10'000'000;

// Enumerates every assignment of each RB to exactly one UE (plus the
// unassigned option for all-zero gain columns) and returns a maximizer of
// the summed gains. Ties go to the lexicographically smallest assignment
// vector. Throws std::invalid_argument when the search space exceeds the
// guard.
AllocationResult exhaustive_allocate(const GainMatrix& g,
                                     std::uint64_t search_guard = kDefaultSearchGuard,
                                     Exec exec = Exec::serial);

// Per-column argmax baseline; coincides with the exhaustive optimum
// because the objective is additive across RBs.
AllocationResult greedy_gpf(const GainMatrix& g, const TieBreak& tie = {});

}  // namespace gpfsched::oracle
