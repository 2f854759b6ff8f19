#include <doctest.h>

#include <stdexcept>

#include "gpfsched/channel.hpp"
#include "gpfsched/rng.hpp"

using namespace gpfsched;

TEST_CASE("placements stay inside the cell") {
  const auto placements = place_ues(1, 500.0, 123);
  REQUIRE(placements.size() == 1);
  CHECK(placements[0].distance_m > 0.0);
  CHECK(placements[0].distance_m <= 500.0);
}

TEST_CASE("placement is deterministic per seed") {
  const auto a = place_ues(10, 500.0, 42);
  const auto b = place_ues(10, 500.0, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].distance_m == b[i].distance_m);
    CHECK(a[i].ue_id == i);
  }
  const auto c = place_ues(10, 500.0, 43);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    all_equal = all_equal && a[i].distance_m == c[i].distance_m;
  }
  CHECK_FALSE(all_equal);
}

// Uniform-area law: d^2 / R^2 is uniform on (0, 1), so its mean is 1/2.
TEST_CASE("distances follow the uniform-disk distribution") {
  const double radius = 500.0;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    for (const auto& ue : place_ues(10, radius, seed)) {
      const double ratio = ue.distance_m / radius;
      sum += ratio * ratio;
      ++count;
    }
  }
  CHECK(sum / static_cast<double>(count) == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("placement rejects bad inputs") {
  CHECK_THROWS_AS(place_ues(0, 500.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(place_ues(1, -5.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(place_ues(1, 5.0, 1, 10.0), std::invalid_argument);
}

TEST_CASE("static channel reproduces the path-loss identities") {
  ChannelModel model;
  model.static_channel = true;
  model.pathloss_exponent = 3.0;
  model.ref_distance_m = 1.0;

  const ChannelState at_ref = sample_gain(model, {0, 1.0, 1.0}, 0, 7);
  CHECK(at_ref.gain == doctest::Approx(1.0).epsilon(1e-12));

  const ChannelState doubled = sample_gain(model, {0, 2.0, 1.0}, 0, 7);
  CHECK(doubled.gain == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("snr follows the channel-state definition exactly") {
  ChannelModel model;
  model.static_channel = true;
  const UePlacement ue{4, 25.0, 2.5};
  const ChannelState state = sample_gain(model, ue, 3, 11);
  CHECK(state.snr ==
        ue.tx_power_w * state.gain / (model.noise_power_w * model.total_bandwidth_hz));
  CHECK(state.ue_id == 4);
  CHECK(state.slot == 3);
}

TEST_CASE("channel draw is deterministic per (ue, slot, seed)") {
  ChannelModel model;
  const UePlacement ue{3, 120.0, 1.0};
  const ChannelState a = sample_gain(model, ue, 7, 9);
  const ChannelState b = sample_gain(model, ue, 7, 9);
  CHECK(a.gain == b.gain);
  CHECK(a.snr == b.snr);
  CHECK(a.gain != sample_gain(model, ue, 8, 9).gain);
  CHECK(a.gain != sample_gain(model, ue, 7, 10).gain);
}

TEST_CASE("gain decreases strictly with distance when fading is off") {
  ChannelModel model;
  model.static_channel = true;
  double previous = sample_gain(model, {0, 10.0, 1.0}, 0, 0).gain;
  for (double d = 20.0; d <= 500.0; d += 10.0) {
    const double gain = sample_gain(model, {0, d, 1.0}, 0, 0).gain;
    CHECK(gain < previous);
    previous = gain;
  }
}

TEST_CASE("fading samples have unit mean") {
  ChannelModel model;
  model.ref_distance_m = 1.0;
  const UePlacement ue{0, 1.0, 1.0};  // path loss gain 1, so gain == fading
  const std::size_t n = 150000;
  double sum = 0.0;
  for (std::uint64_t slot = 0; slot < n; ++slot) {
    sum += sample_gain(model, ue, slot, 5).gain;
  }
  CHECK(sum / static_cast<double>(n) == doctest::Approx(1.0).epsilon(0.01));
}
