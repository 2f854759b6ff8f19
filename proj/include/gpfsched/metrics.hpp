#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gpfsched::metrics {

struct EcdfPoint {
  double value = 0.0;
  double cumulative_probability = 0.0;
};

// Right-continuous empirical CDF: strictly increasing values, probabilities
// k/N ending at exactly 1.
struct EcdfCurve {
  std::vector<EcdfPoint> points;
};

struct FairnessSample {
  std::uint64_t slot = 0;
  double index = 0.0;  // in [1/U, 1]
};

// (sum v)^2 / (n * sum v^2). Throws std::invalid_argument on empty,
// negative, or all-zero input.
double jains_index(std::span<const double> values);

// Throws std::invalid_argument on empty input.
EcdfCurve ecdf(std::vector<double> samples);

double sum_rate_bps(std::span<const double> rates_bps);

inline double bps_to_mbps(double bps) { return bps / 1e6; }

}  // namespace gpfsched::metrics
