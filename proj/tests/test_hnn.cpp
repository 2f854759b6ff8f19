#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gpfsched/hnn.hpp"
#include "gpfsched/rng.hpp"

using namespace gpfsched;

namespace {

hnn::HopfieldNetwork make_net(const std::vector<std::vector<double>>& gains) {
  GainMatrix g(gains.size(), gains[0].size());
  for (std::size_t u = 0; u < gains.size(); ++u) {
    for (std::size_t b = 0; b < gains[u].size(); ++b) {
      g.at(u, b) = gains[u][b];
    }
  }
  return hnn::network_from_gains(std::move(g));
}

GainMatrix random_gains(std::size_t num_ues, std::size_t num_rbs,
                        std::uint64_t seed) {
  GainMatrix g(num_ues, num_rbs);
  for (std::size_t u = 0; u < num_ues; ++u) {
    for (std::size_t b = 0; b < num_rbs; ++b) {
      g.at(u, b) = rng::uniform01(rng::hash_key(seed, 0x31u, u, b));
    }
  }
  return g;
}

// Brute force over all U^B one-UE-per-RB assignments.
double enumerate_best(const GainMatrix& g) {
  const std::size_t num_ues = g.num_ues();
  const std::size_t num_rbs = g.num_rbs();
  std::vector<std::size_t> digits(num_rbs, 0);
  double best = -1.0;
  while (true) {
    double objective = 0.0;
    for (std::size_t b = 0; b < num_rbs; ++b) objective += g.at(digits[b], b);
    if (objective > best) best = objective;
    std::size_t b = num_rbs;
    while (b > 0) {
      --b;
      if (++digits[b] < num_ues) break;
      digits[b] = 0;
      if (b == 0) return best;
    }
  }
}

}  // namespace

TEST_CASE("delta is the Kronecker delta over neuron pairs") {
  const auto net = make_net({{1, 1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1, 1}});
  CHECK(hnn::delta(net, 2, 5, 2, 5) == 1);
  CHECK(hnn::delta(net, 2, 5, 2, 4) == 0);
  CHECK(hnn::delta(net, 0, 0, 1, 0) == 0);
  CHECK_THROWS_AS(hnn::delta(net, 3, 0, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(hnn::delta(net, 0, 6, 0, 0), std::out_of_range);
}

TEST_CASE("built network has zero thresholds, zero state, diagonal weights") {
  const auto grid = build_grid(Numerology{15e3, 12}, 2, 18e6);
  const std::vector<ChannelState> channels{{0, 0, 1.0, 3.0}, {1, 0, 1.0, 1.0}};
  const std::vector<double> averages{1e6, 2e6};
  const auto net = hnn::build_network(channels, averages, grid, {1.0, 1.0});

  for (std::size_t u = 0; u < net.num_users; ++u) {
    for (std::size_t b = 0; b < net.num_rbs; ++b) {
      CHECK(net.threshold(u, b) == 0.0);
      CHECK_FALSE(net.fired(u, b));
      for (std::size_t i = 0; i < net.num_users; ++i) {
        for (std::size_t j = 0; j < net.num_rbs; ++j) {
          CHECK(net.weight(u, b, i, j) == net.weight(i, j, u, b));
          if (u != i || b != j) CHECK(net.weight(u, b, i, j) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("zero snr yields an all-zero weight matrix") {
  const auto grid = build_grid(Numerology{15e3, 12}, 3, 18e6);
  const std::vector<ChannelState> channels{{0, 0, 0.0, 0.0}, {1, 0, 0.0, 0.0}};
  const std::vector<double> averages{1e6, 1e6};
  const auto net = hnn::build_network(channels, averages, grid, {1.0, 1.0});
  for (std::size_t u = 0; u < 2; ++u) {
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(net.self_weights.at(u, b) == 0.0);
    }
  }
}

TEST_CASE("single-neuron weight evaluates to 0.36") {
  const auto grid = build_grid(Numerology{15e3, 12}, 1, 180e3);
  const std::vector<ChannelState> channels{{0, 0, 1.0, 3.0}};
  const std::vector<double> averages{1e6};
  const auto net = hnn::build_network(channels, averages, grid, {1.0, 1.0});

  // Cross-check against the objective of the singleton allocation.
  AllocationMatrix x(1, 1);
  x.set(0, 0, true);
  const double objective = gpf_objective(x, channels, averages, grid, {1.0, 1.0});
  CHECK(net.self_weights.at(0, 0) == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(net.self_weights.at(0, 0) == doctest::Approx(objective).epsilon(1e-12));
}

TEST_CASE("alpha 0 makes the weights independent of the averages") {
  const auto grid = build_grid(Numerology{15e3, 12}, 2, 18e6);
  const std::vector<ChannelState> channels{{0, 0, 1.0, 3.0}, {1, 0, 1.0, 1.0}};
  const std::vector<double> avg_a{1e6, 2e6};
  const std::vector<double> avg_b{7e3, 9e9};
  const auto net_a = hnn::build_network(channels, avg_a, grid, {0.0, 1.0});
  const auto net_b = hnn::build_network(channels, avg_b, grid, {0.0, 1.0});
  CHECK(net_a.self_weights == net_b.self_weights);
}

TEST_CASE("energy of the resting network is zero") {
  auto net = make_net({{0.5, 0.25}, {1.0, 0.125}});
  CHECK(hnn::energy(net) == 0.0);
}

TEST_CASE("energy of a single firing neuron is minus half its weight") {
  auto net = make_net({{0.36}});
  net.set_state(0, 0, true);
  CHECK(hnn::energy(net) == doctest::Approx(-0.18).epsilon(1e-12));
}

TEST_CASE("energy of the full-fire state sums the diagonal") {
  auto net = make_net({{0.5, 0.25}, {1.0, 0.125}});
  double diagonal = 0.0;
  for (std::size_t u = 0; u < 2; ++u) {
    for (std::size_t b = 0; b < 2; ++b) {
      net.set_state(u, b, true);
      diagonal += net.self_weights.at(u, b);
    }
  }
  CHECK(hnn::energy(net) == doctest::Approx(-0.5 * diagonal).epsilon(1e-12));
}

TEST_CASE("generic update fires at the threshold boundary") {
  auto net = make_net({{0.0, 0.0}});
  CHECK(hnn::generic_update(net, 0, 0));  // 0 >= 0
  CHECK(net.fired(0, 0));
}

TEST_CASE("generic update fires a resting neuron with zero input") {
  auto net = make_net({{0.36}});
  CHECK_FALSE(net.fired(0, 0));
  CHECK(hnn::generic_update(net, 0, 0));
}

TEST_CASE("generic update clears a neuron whose threshold is unreachable") {
  auto net = make_net({{0.36}});
  net.threshold(0, 0) = 10.0;
  net.set_state(0, 0, true);
  CHECK_FALSE(hnn::generic_update(net, 0, 0));
  CHECK_FALSE(net.fired(0, 0));
  CHECK_THROWS_AS(hnn::generic_update(net, 0, 5), std::out_of_range);
}

TEST_CASE("literal activation over the resting state is zero") {
  const auto net = make_net({{0.5, 0.25}, {1.0, 0.125}});
  for (std::size_t u = 0; u < 2; ++u) {
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(hnn::activation(net, u, b, net.state) == 0.0);
    }
  }
}

TEST_CASE("candidate activation equals the self-weight minus the threshold") {
  auto net = make_net({{0.5, 0.25}, {1.0, 0.125}});
  CHECK(hnn::candidate_activation(net, 1, 0) == 1.0);
  net.threshold(1, 0) = 0.3;
  CHECK(hnn::candidate_activation(net, 1, 0) == doctest::Approx(0.7).epsilon(1e-12));

  std::vector<std::uint8_t> candidate(4, 0);
  candidate[1 * 2 + 0] = 1;
  CHECK(hnn::activation(net, 1, 0, candidate) ==
        doctest::Approx(0.7).epsilon(1e-12));
  const std::vector<std::uint8_t> wrong_size(3, 0);
  CHECK_THROWS_AS(hnn::activation(net, 1, 0, wrong_size), std::invalid_argument);
}

TEST_CASE("winner-take-all matches brute force on the 2x2 example") {
  auto net = make_net({{5, 1}, {2, 3}});
  auto result = hnn::solve(net);

  CHECK(enumerate_best(net.self_weights) == 8.0);
  CHECK(result.objective == 8.0);
  REQUIRE(result.rb_to_ue.size() == 2);
  CHECK(result.rb_to_ue[0] == 0);
  CHECK(result.rb_to_ue[1] == 1);
  CHECK(result.trace.converged);
}

TEST_CASE("all-equal gains go to UE 0 under the lowest-index rule") {
  auto net = make_net({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const auto result = hnn::solve(net);
  for (std::size_t b = 0; b < 3; ++b) CHECK(result.rb_to_ue[b] == 0);
}

TEST_CASE("a single UE receives every RB") {
  auto net = make_net({{0.3, 0.7, 0.1}});
  const auto result = hnn::solve(net);
  for (std::size_t b = 0; b < 3; ++b) CHECK(result.rb_to_ue[b] == 0);
}

TEST_CASE("solve converges within two sweeps and stays feasible") {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    const std::size_t num_ues = 1 + rng::hash_key(trial, 0x32u, 0) % 4;
    const std::size_t num_rbs = 1 + rng::hash_key(trial, 0x32u, 1) % 6;
    auto net = hnn::network_from_gains(random_gains(num_ues, num_rbs, trial));
    const auto result = hnn::solve(net);

    CHECK(result.trace.converged);
    CHECK(result.trace.sweep_count <= 2);
    CHECK(check_constraints(result.allocation).ok);
    for (std::size_t i = 1; i < result.trace.energy_series.size(); ++i) {
      CHECK(result.trace.energy_series[i] <= result.trace.energy_series[i - 1]);
    }
    CHECK(result.objective ==
          doctest::Approx(enumerate_best(net.self_weights)).epsilon(1e-12));
  }
}

TEST_CASE("zero-gain network settles at zero energy") {
  auto net = make_net({{0, 0}, {0, 0}});
  const auto result = hnn::solve(net);
  CHECK(result.trace.converged);
  CHECK(result.trace.energy_series.back() == 0.0);
  CHECK(result.rb_to_ue == std::vector<std::int32_t>{0, 0});
}

TEST_CASE("solve reports non-convergence when starved of sweeps") {
  auto net = make_net({{5, 1}, {2, 3}});
  const auto result = hnn::solve(net, 1);
  CHECK_FALSE(result.trace.converged);
  CHECK(result.trace.sweep_count == 1);
  CHECK_THROWS_AS(hnn::solve(net, 0), std::invalid_argument);
}

TEST_CASE("scaling one column leaves its winner unchanged") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    GainMatrix g = random_gains(4, 5, trial + 900);
    auto base_net = hnn::network_from_gains(g);
    const auto base = hnn::solve(base_net);

    const std::size_t column = rng::hash_key(trial, 0x33u, 0) % 5;
    const double factor =
        0.1 + 10.0 * rng::uniform01(rng::hash_key(trial, 0x33u, 1));
    for (std::size_t u = 0; u < 4; ++u) g.at(u, column) *= factor;

    auto scaled_net = hnn::network_from_gains(g);
    const auto scaled = hnn::solve(scaled_net);
    CHECK(scaled.rb_to_ue[column] == base.rb_to_ue[column]);
  }
}

TEST_CASE("parallel sweeps reproduce the serial reference") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const GainMatrix g = random_gains(6, 40, trial + 1700);
    auto serial_net = hnn::network_from_gains(g);
    auto parallel_net = hnn::network_from_gains(g);
    const auto serial = hnn::solve(serial_net, 10, {}, Exec::serial);
    const auto parallel = hnn::solve(parallel_net, 10, {}, Exec::parallel);
    CHECK(serial.rb_to_ue == parallel.rb_to_ue);
    CHECK(serial.objective == parallel.objective);
    CHECK(serial.trace.energy_series == parallel.trace.energy_series);
  }
}

TEST_CASE("seeded-random ties stay stable within a solve") {
  auto gains = GainMatrix(4, 6, 1.0);  // every column fully tied
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto net = hnn::network_from_gains(gains);
    const TieBreak tie{TieRule::seeded_random, seed, 17};
    const auto result = hnn::solve(net, 10, tie);
    CHECK(result.trace.converged);
    CHECK(result.trace.sweep_count <= 2);

    auto repeat_net = hnn::network_from_gains(gains);
    const auto repeat = hnn::solve(repeat_net, 10, tie);
    CHECK(result.rb_to_ue == repeat.rb_to_ue);
  }

  // Different slots may pick different tied winners.
  bool any_difference = false;
  auto net_a = hnn::network_from_gains(gains);
  const auto base = hnn::solve(net_a, 10, {TieRule::seeded_random, 5, 0});
  for (std::uint64_t slot = 1; slot < 30 && !any_difference; ++slot) {
    auto net_b = hnn::network_from_gains(gains);
    const auto other = hnn::solve(net_b, 10, {TieRule::seeded_random, 5, slot});
    any_difference = other.rb_to_ue != base.rb_to_ue;
  }
  CHECK(any_difference);
}

// The sparse evaluations must agree with the literal four-index sums
// taken through the full weight accessor.
TEST_CASE("sparse energy and activation match the four-index forms") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const std::size_t num_ues = 1 + rng::hash_key(trial, 0x38u, 0) % 4;
    const std::size_t num_rbs = 1 + rng::hash_key(trial, 0x38u, 1) % 5;
    auto net = hnn::network_from_gains(random_gains(num_ues, num_rbs, trial + 77));
    for (std::size_t i = 0; i < net.thresholds.size(); ++i) {
      net.thresholds[i] = rng::uniform01(rng::hash_key(trial, 0x39u, i)) - 0.5;
      net.state[i] = rng::hash_key(trial, 0x3au, i) % 2;
    }

    double quadratic = 0.0;
    double linear = 0.0;
    for (std::size_t u = 0; u < num_ues; ++u) {
      for (std::size_t b = 0; b < num_rbs; ++b) {
        for (std::size_t k = 0; k < num_ues; ++k) {
          for (std::size_t l = 0; l < num_rbs; ++l) {
            quadratic += net.weight(u, b, k, l) *
                         (net.fired(u, b) ? 1.0 : 0.0) *
                         (net.fired(k, l) ? 1.0 : 0.0);
          }
        }
        linear += net.threshold(u, b) * (net.fired(u, b) ? 1.0 : 0.0);
      }
    }
    CHECK(hnn::energy(net) ==
          doctest::Approx(-0.5 * quadratic + linear).epsilon(1e-12));

    for (std::size_t u = 0; u < num_ues; ++u) {
      for (std::size_t b = 0; b < num_rbs; ++b) {
        double input = 0.0;
        for (std::size_t k = 0; k < num_ues; ++k) {
          for (std::size_t l = 0; l < num_rbs; ++l) {
            input += net.weight(u, b, k, l) * (net.fired(k, l) ? 1.0 : 0.0);
          }
        }
        const double expected = input - net.threshold(u, b);
        CHECK(hnn::activation(net, u, b, net.state) ==
              doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

// Classical descent of the threshold rule under asynchronous updates;
// holds for the diagonal weights because the self terms are nonnegative.
TEST_CASE("generic updates never increase the energy") {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    const std::size_t num_ues = 1 + rng::hash_key(trial, 0x34u, 0) % 4;
    const std::size_t num_rbs = 1 + rng::hash_key(trial, 0x34u, 1) % 6;
    auto net = hnn::network_from_gains(random_gains(num_ues, num_rbs, trial + 40));
    for (std::size_t i = 0; i < net.thresholds.size(); ++i) {
      net.thresholds[i] =
          rng::uniform01(rng::hash_key(trial, 0x35u, i)) - 0.5;
      net.state[i] = rng::hash_key(trial, 0x36u, i) % 2;
    }

    double previous = hnn::energy(net);
    for (std::size_t step = 0; step < 100; ++step) {
      const std::size_t u = rng::hash_key(trial, 0x37u, step, 0) % num_ues;
      const std::size_t b = rng::hash_key(trial, 0x37u, step, 1) % num_rbs;
      hnn::generic_update(net, u, b);
      const double current = hnn::energy(net);
      CHECK(current <= previous);
      previous = current;
    }
  }
}
