#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gpfsched/channel.hpp"
#include "gpfsched/grid.hpp"
#include "gpfsched/rate.hpp"

namespace gpfsched {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// reference implementation; the OpenMP variants must produce bit-identical
// results, which the test suite checks.
enum class Exec { serial, parallel };

enum class TieRule { lowest_index, seeded_random };

struct TieBreak {
  TieRule rule = TieRule::lowest_index;
  std::uint64_t seed = 0;
  std::uint64_t slot = 0;
};

// U x B nonnegative coefficient matrix
//   g(u, b) = f_b * log2(1 + snr_u) / max(avg_u, floor)^alpha
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(std::size_t num_ues, std::size_t num_rbs, double value = 0.0)
      : num_ues_(num_ues), num_rbs_(num_rbs), data_(num_ues * num_rbs, value) {}

  std::size_t num_ues() const { return num_ues_; }
  std::size_t num_rbs() const { return num_rbs_; }

  double at(std::size_t u, std::size_t b) const { return data_[u * num_rbs_ + b]; }
  double& at(std::size_t u, std::size_t b) { return data_[u * num_rbs_ + b]; }

  std::span<const double> data() const { return data_; }

  bool operator==(const GainMatrix&) const = default;

 private:
  std::size_t num_ues_ = 0;
  std::size_t num_rbs_ = 0;
  std::vector<double> data_;
};

namespace kernels {

// --- gain matrix -----------------------------------------------------------

GainMatrix build_gain_matrix_serial(std::span<const ChannelState> channels,
                                    std::span<const double> average_bps,
                                    const ResourceGrid& grid,
                                    const GpfParams& params);

GainMatrix build_gain_matrix_parallel(std::span<const ChannelState> channels,
                                      std::span<const double> average_bps,
                                      const ResourceGrid& grid,
                                      const GpfParams& params);

// --- per-RB winner-take-all ------------------------------------------------

// Winner of a single RB column: the UE index maximizing scores(u, b).
std::size_t column_winner(const GainMatrix& scores, std::size_t b,
                          const TieBreak& tie);

// rb_to_ue[b] = argmax_u scores(u, b) for every column, tie rule applied.
std::vector<std::int32_t> wta_assign_serial(const GainMatrix& scores,
                                            const TieBreak& tie);

std::vector<std::int32_t> wta_assign_parallel(const GainMatrix& scores,
                                              const TieBreak& tie);

// --- exhaustive enumeration --------------------------------------------------

struct SearchBest {
  double objective = 0.0;
  std::uint64_t code = 0;  // mixed-radix encoding, RB 0 most significant
};

// Scans assignment codes [begin, end) and keeps the best objective;
// exact-value ties keep the smallest code. radix[b] is the number of
// choices for column b (num_ues, plus one trailing "unassigned" slot
// for all-zero columns).
SearchBest scan_codes(const GainMatrix& g, std::span<const std::uint32_t> radix,
                      std::uint64_t begin, std::uint64_t end);

SearchBest exhaustive_best_serial(const GainMatrix& g,
                                  std::span<const std::uint32_t> radix,
                                  std::uint64_t num_codes);

SearchBest exhaustive_best_parallel(const GainMatrix& g,
                                    std::span<const std::uint32_t> radix,
                                    std::uint64_t num_codes);

}  // namespace kernels

GainMatrix build_gain_matrix(std::span<const ChannelState> channels,
                             std::span<const double> average_bps,
                             const ResourceGrid& grid, const GpfParams& params,
                             Exec exec = Exec::serial);

}  // namespace gpfsched
