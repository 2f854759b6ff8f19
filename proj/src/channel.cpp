#include "gpfsched/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpfsched/rng.hpp"

namespace gpfsched {

std::vector<UePlacement> place_ues(std::size_t num_ues, double cell_radius_m,
                                   std::uint64_t seed, double min_distance_m,
                                   double tx_power_w) {
  if (num_ues == 0) throw std::invalid_argument("num_ues must be at least 1");
  if (cell_radius_m <= 0.0) throw std::invalid_argument("cell radius must be positive");
  if (min_distance_m > cell_radius_m) {
    throw std::invalid_argument("min distance exceeds the cell radius");
  }
  if (tx_power_w <= 0.0) throw std::invalid_argument("tx power must be positive");

  std::vector<UePlacement> placements;
  placements.reserve(num_ues);
  for (std::size_t ue = 0; ue < num_ues; ++ue) {
    const double u = rng::uniform01(rng::hash_key(seed, rng::kPlacementStream, ue));
    const double d = std::max(min_distance_m, cell_radius_m * std::sqrt(u));
    placements.push_back({ue, d, tx_power_w});
  }
  return placements;
}

double pathloss_gain(const ChannelModel& model, double distance_m) {
  return std::pow(distance_m / model.ref_distance_m, -model.pathloss_exponent);
}

ChannelState sample_gain(const ChannelModel& model, const UePlacement& placement,
                         std::uint64_t slot, std::uint64_t fading_seed) {
  const double fading =
      model.static_channel
          ? 1.0
          : rng::exponential(rng::hash_key(fading_seed, rng::kFadingStream,
                                           placement.ue_id, slot));
  const double gain = pathloss_gain(model, placement.distance_m) * fading;
  const double snr = placement.tx_power_w * gain /
                     (model.noise_power_w * model.total_bandwidth_hz);
  return {placement.ue_id, slot, gain, snr};
}

}  // namespace gpfsched
