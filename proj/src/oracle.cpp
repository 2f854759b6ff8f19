#include "gpfsched/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace gpfsched::oracle {

namespace {

void check_matrix(const GainMatrix& g) {
  if (g.num_ues() == 0 || g.num_rbs() == 0) {
    throw std::invalid_argument("gain matrix must have at least one UE and RB");
  }
}

bool column_all_zero(const GainMatrix& g, std::size_t b) {
  for (std::size_t u = 0; u < g.num_ues(); ++u) {
    if (g.at(u, b) != 0.0) return false;
  }
  return true;
}

double assignment_objective(const GainMatrix& g,
                            std::span<const std::int32_t> rb_to_ue) {
  double objective = 0.0;
  for (std::size_t b = 0; b < g.num_rbs(); ++b) {
    if (rb_to_ue[b] >= 0) {
      objective += g.at(static_cast<std::size_t>(rb_to_ue[b]), b);
    }
  }
  return objective;
}

}  // namespace

AllocationResult exhaustive_allocate(const GainMatrix& g,
                                     std::uint64_t search_guard, Exec exec) {
  check_matrix(g);
  const std::uint32_t num_ues = static_cast<std::uint32_t>(g.num_ues());
  const std::size_t num_rbs = g.num_rbs();

  // One digit per RB; all-zero columns carry an extra trailing value for
  // the unassigned option so the search covers every feasible matrix.
  std::vector<std::uint32_t> radix(num_rbs);
  std::uint64_t num_codes = 1;
  for (std::size_t b = 0; b < num_rbs; ++b) {
    radix[b] = column_all_zero(g, b) ? num_ues + 1 : num_ues;
    if (num_codes > search_guard / radix[b]) {
      throw std::invalid_argument("exhaustive search space exceeds the guard");
    }
    num_codes *= radix[b];
  }

  const kernels::SearchBest best =
      exec == Exec::parallel
          ? kernels::exhaustive_best_parallel(g, radix, num_codes)
          : kernels::exhaustive_best_serial(g, radix, num_codes);

  AllocationResult result;
  result.rb_to_ue.assign(num_rbs, -1);
  std::uint64_t rest = best.code;
  for (std::size_t b = num_rbs; b-- > 0;) {
    const std::uint32_t digit = static_cast<std::uint32_t>(rest % radix[b]);
    rest /= radix[b];
    result.rb_to_ue[b] = digit < num_ues ? static_cast<std::int32_t>(digit) : -1;
  }
  result.objective = assignment_objective(g, result.rb_to_ue);
  result.allocation = AllocationMatrix::from_assignment(result.rb_to_ue, num_ues);
  return result;
}

AllocationResult greedy_gpf(const GainMatrix& g, const TieBreak& tie) {
  check_matrix(g);
  AllocationResult result;
  result.rb_to_ue = kernels::wta_assign_serial(g, tie);
  result.objective = assignment_objective(g, result.rb_to_ue);
  result.allocation =
      AllocationMatrix::from_assignment(result.rb_to_ue, g.num_ues());
  return result;
}

}  // namespace gpfsched::oracle
