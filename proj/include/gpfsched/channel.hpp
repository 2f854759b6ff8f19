#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gpfsched {

struct UePlacement {
  std::size_t ue_id = 0;
  double distance_m = 0.0;
  double tx_power_w = 1.0;
};

struct ChannelState {
  std::size_t ue_id = 0;
  std::uint64_t slot = 0;
  double gain = 0.0;  // dimensionless power gain h_u
  double snr = 0.0;   // tx_power * gain / (noise_power * total_bandwidth)
};

// Log-distance path loss with unit-mean exponential (Rayleigh power) fading.
struct ChannelModel {
  double pathloss_exponent = 3.0;
  double ref_distance_m = 1.0;
  double noise_power_w = 5.5556e-14;
  double total_bandwidth_hz = 18e6;
  bool static_channel = false;  // forces the fading factor to 1
};

// Distances drawn uniformly over the disk area (radius * sqrt(U(0,1))),
// clamped below by min_distance_m. Deterministic per seed.
std::vector<UePlacement> place_ues(std::size_t num_ues, double cell_radius_m,
                                   std::uint64_t seed,
                                   double min_distance_m = 10.0,
                                   double tx_power_w = 1.0);

// (distance / ref_distance)^-exponent
double pathloss_gain(const ChannelModel& model, double distance_m);

// Per-(ue, slot) channel draw from a counter-based stream; flat across RBs.
ChannelState sample_gain(const ChannelModel& model, const UePlacement& placement,
                         std::uint64_t slot, std::uint64_t fading_seed);

}  // namespace gpfsched
