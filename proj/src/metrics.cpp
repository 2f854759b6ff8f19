#include "gpfsched/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpfsched::metrics {

double jains_index(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("jains_index of empty list");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("jains_index of negative value");
    sum += v;
    sum_sq += v * v;
  }
  if (sum_sq == 0.0) throw std::invalid_argument("jains_index of all-zero list");
  return (sum * sum) / (static_cast<double>(values.size()) * sum_sq);
}

EcdfCurve ecdf(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("ecdf of empty sample");
  std::sort(samples.begin(), samples.end());

  EcdfCurve curve;
  const double n = static_cast<double>(samples.size());
  std::size_t seen = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ++seen;
    const bool last_of_value = i + 1 == samples.size() || samples[i + 1] != samples[i];
    if (last_of_value) {
      curve.points.push_back({samples[i], static_cast<double>(seen) / n});
    }
  }
  return curve;
}

double sum_rate_bps(std::span<const double> rates_bps) {
  double sum = 0.0;
  for (double r : rates_bps) sum += r;
  return sum;
}

}  // namespace gpfsched::metrics
