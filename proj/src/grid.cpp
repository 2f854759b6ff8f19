#include "gpfsched/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gpfsched {

namespace {

constexpr double kAllowedSpacingsHz[] = {15e3, 30e3, 60e3, 120e3, 240e3, 480e3};

void check_numerology(const Numerology& numerology) {
  if (!is_allowed_spacing(numerology.subcarrier_spacing_hz)) {
    throw std::invalid_argument("subcarrier spacing " +
                                std::to_string(numerology.subcarrier_spacing_hz) +
                                " Hz is not an NR spacing");
  }
  if (numerology.subcarriers_per_rb <= 0) {
    throw std::invalid_argument("subcarriers_per_rb must be positive");
  }
}

}  // namespace

bool is_allowed_spacing(double spacing_hz) {
  for (double allowed : kAllowedSpacingsHz) {
    if (spacing_hz == allowed) return true;
  }
  return false;
}

double ResourceGrid::allocated_bandwidth_hz() const {
  double sum = 0.0;
  for (const auto& rb : rbs) sum += rb.bandwidth_hz;
  return sum;
}

ResourceGrid build_grid(const Numerology& numerology, std::size_t num_rbs,
                        double total_bandwidth_hz) {
  return build_grid(std::vector<NumerologyBlock>{{numerology, num_rbs}},
                    total_bandwidth_hz);
}

ResourceGrid build_grid(const std::vector<NumerologyBlock>& blocks,
                        double total_bandwidth_hz) {
  if (blocks.empty()) throw std::invalid_argument("no numerology blocks");
  if (total_bandwidth_hz <= 0.0) {
    throw std::invalid_argument("total bandwidth must be positive");
  }

  ResourceGrid grid;
  grid.total_bandwidth_hz = total_bandwidth_hz;

  double used = 0.0;
  for (const auto& block : blocks) {
    check_numerology(block.numerology);
    if (block.num_rbs == 0) {
      throw std::invalid_argument("numerology block with zero RBs");
    }
    const double rb_bw = block.numerology.rb_bandwidth_hz();
    used += rb_bw * static_cast<double>(block.num_rbs);
    if (used > total_bandwidth_hz) {
      throw std::invalid_argument("resource blocks exceed the bandwidth budget");
    }
    for (std::size_t i = 0; i < block.num_rbs; ++i) {
      grid.rbs.push_back({grid.rbs.size(), rb_bw});
    }
  }
  return grid;
}

}  // namespace gpfsched
