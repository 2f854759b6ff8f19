#pragma once

#include <cstddef>
#include <vector>

namespace gpfsched {

// NR waveform configuration: subcarrier spacing plus subcarriers per RB.
struct Numerology {
  double subcarrier_spacing_hz = 15e3;
  int subcarriers_per_rb = 12;

  double rb_bandwidth_hz() const {
    return subcarrier_spacing_hz * subcarriers_per_rb;
  }
};

// Subcarrier spacings accepted by the grid builder (15 kHz .. 480 kHz).
bool is_allowed_spacing(double spacing_hz);

struct RbDescriptor {
  std::size_t index = 0;
  double bandwidth_hz = 0.0;
};

inline constexpr double kSlotDurationS = 1e-3;

struct ResourceGrid {
  std::vector<RbDescriptor> rbs;
  double total_bandwidth_hz = 0.0;
  double slot_duration_s = kSlotDurationS;

  std::size_t num_rbs() const { return rbs.size(); }
  double bandwidth_of(std::size_t b) const { return rbs[b].bandwidth_hz; }
  double allocated_bandwidth_hz() const;
};

// Uniform grid: num_rbs blocks of spacing * subcarriers bandwidth each.
// Throws std::invalid_argument if the spacing is outside the allowed set
// or the blocks do not fit in total_bandwidth_hz.
ResourceGrid build_grid(const Numerology& numerology, std::size_t num_rbs,
                        double total_bandwidth_hz);

struct NumerologyBlock {
  Numerology numerology;
  std::size_t num_rbs = 0;
};

// Mixed-width grid: concatenates the blocks' RBs in order.
ResourceGrid build_grid(const std::vector<NumerologyBlock>& blocks,
                        double total_bandwidth_hz);

}  // namespace gpfsched
