#include "gpfsched/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "gpfsched/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gpfsched {
namespace kernels {

namespace {

// log2(1 + snr_u) / max(avg_u, floor)^alpha
double ue_coefficient(const ChannelState& channel, double average_bps,
                      const GpfParams& params) {
  const double denom =
      std::pow(std::max(average_bps, params.average_floor_bps), params.alpha);
  const double c = std::log2(1.0 + channel.snr) / denom;
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw std::domain_error("gain coefficient is not finite and nonnegative");
  }
  return c;
}

void check_inputs(std::span<const ChannelState> channels,
                  std::span<const double> average_bps) {
  if (channels.size() != average_bps.size()) {
    throw std::invalid_argument("channel and average lists differ in length");
  }
  if (channels.empty()) throw std::invalid_argument("no UEs");
}

void fill_row(GainMatrix& g, std::size_t u, double coefficient,
              const ResourceGrid& grid) {
  for (std::size_t b = 0; b < grid.num_rbs(); ++b) {
    g.at(u, b) = grid.bandwidth_of(b) * coefficient;
  }
}

}  // namespace

GainMatrix build_gain_matrix_serial(std::span<const ChannelState> channels,
                                    std::span<const double> average_bps,
                                    const ResourceGrid& grid,
                                    const GpfParams& params) {
  check_inputs(channels, average_bps);
  GainMatrix g(channels.size(), grid.num_rbs());
  for (std::size_t u = 0; u < channels.size(); ++u) {
    fill_row(g, u, ue_coefficient(channels[u], average_bps[u], params), grid);
  }
  return g;
}

GainMatrix build_gain_matrix_parallel(std::span<const ChannelState> channels,
                                      std::span<const double> average_bps,
                                      const ResourceGrid& grid,
                                      const GpfParams& params) {
  check_inputs(channels, average_bps);
  GainMatrix g(channels.size(), grid.num_rbs());
  const std::int64_t num_ues = static_cast<std::int64_t>(channels.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t u = 0; u < num_ues; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    fill_row(g, uu, ue_coefficient(channels[uu], average_bps[uu], params), grid);
  }
  return g;
}

std::size_t column_winner(const GainMatrix& scores, std::size_t b,
                          const TieBreak& tie) {
  const std::size_t num_ues = scores.num_ues();
  std::size_t best = 0;
  double best_score = scores.at(0, b);
  for (std::size_t u = 1; u < num_ues; ++u) {
    if (scores.at(u, b) > best_score) {
      best_score = scores.at(u, b);
      best = u;
    }
  }
  if (tie.rule == TieRule::lowest_index) return best;

  std::size_t tied = 0;
  for (std::size_t u = 0; u < num_ues; ++u) {
    if (scores.at(u, b) == best_score) ++tied;
  }
  if (tied == 1) return best;

  // Pick is keyed per (seed, slot, column) so repeated sweeps of the same
  // slot resolve ties identically and the relaxation still converges.
  std::uint64_t pick =
      rng::hash_key(tie.seed, rng::kTieStream, tie.slot, b) % tied;
  for (std::size_t u = 0; u < num_ues; ++u) {
    if (scores.at(u, b) == best_score) {
      if (pick == 0) return u;
      --pick;
    }
  }
  return best;  // unreachable
}

std::vector<std::int32_t> wta_assign_serial(const GainMatrix& scores,
                                            const TieBreak& tie) {
  std::vector<std::int32_t> rb_to_ue(scores.num_rbs());
  for (std::size_t b = 0; b < scores.num_rbs(); ++b) {
    rb_to_ue[b] = static_cast<std::int32_t>(column_winner(scores, b, tie));
  }
  return rb_to_ue;
}

std::vector<std::int32_t> wta_assign_parallel(const GainMatrix& scores,
                                              const TieBreak& tie) {
  std::vector<std::int32_t> rb_to_ue(scores.num_rbs());
  const std::int64_t num_rbs = static_cast<std::int64_t>(scores.num_rbs());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < num_rbs; ++b) {
    rb_to_ue[b] = static_cast<std::int32_t>(
        column_winner(scores, static_cast<std::size_t>(b), tie));
  }
  return rb_to_ue;
}

SearchBest scan_codes(const GainMatrix& g, std::span<const std::uint32_t> radix,
                      std::uint64_t begin, std::uint64_t end) {
  const std::size_t num_rbs = g.num_rbs();
  const std::uint32_t num_ues = static_cast<std::uint32_t>(g.num_ues());

  SearchBest best{-1.0, begin};
  std::vector<std::uint32_t> digits(num_rbs);
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t rest = code;
    for (std::size_t b = num_rbs; b-- > 0;) {
      digits[b] = static_cast<std::uint32_t>(rest % radix[b]);
      rest /= radix[b];
    }
    double objective = 0.0;
    for (std::size_t b = 0; b < num_rbs; ++b) {
      if (digits[b] < num_ues) objective += g.at(digits[b], b);
    }
    // Strictly greater keeps the first (lexicographically smallest) code.
    if (objective > best.objective) {
      best.objective = objective;
      best.code = code;
    }
  }
  return best;
}

namespace {

// Merge preserves the scan order: left chunk wins ties.
SearchBest merge_best(const SearchBest& left, const SearchBest& right) {
  if (right.objective > left.objective) return right;
  if (right.objective == left.objective && right.code < left.code) return right;
  return left;
}

}  // namespace

SearchBest exhaustive_best_serial(const GainMatrix& g,
                                  std::span<const std::uint32_t> radix,
                                  std::uint64_t num_codes) {
  return scan_codes(g, radix, 0, num_codes);
}

SearchBest exhaustive_best_parallel(const GainMatrix& g,
                                    std::span<const std::uint32_t> radix,
                                    std::uint64_t num_codes) {
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif
  const std::uint64_t chunks =
      std::min<std::uint64_t>(std::max(max_threads, 1), std::max<std::uint64_t>(num_codes, 1));
  std::vector<SearchBest> partial(chunks);
  const std::uint64_t chunk_size = (num_codes + chunks - 1) / chunks;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunks); ++i) {
    const std::uint64_t begin = static_cast<std::uint64_t>(i) * chunk_size;
    const std::uint64_t end = std::min(num_codes, begin + chunk_size);
    partial[static_cast<std::size_t>(i)] =
        begin < end ? scan_codes(g, radix, begin, end) : SearchBest{-1.0, begin};
  }
  SearchBest best = partial[0];
  for (std::size_t i = 1; i < partial.size(); ++i) {
    best = merge_best(best, partial[i]);
  }
  return best;
}

}  // namespace kernels

GainMatrix build_gain_matrix(std::span<const ChannelState> channels,
                             std::span<const double> average_bps,
                             const ResourceGrid& grid, const GpfParams& params,
                             Exec exec) {
  return exec == Exec::parallel
             ? kernels::build_gain_matrix_parallel(channels, average_bps, grid, params)
             : kernels::build_gain_matrix_serial(channels, average_bps, grid, params);
}

}  // namespace gpfsched
