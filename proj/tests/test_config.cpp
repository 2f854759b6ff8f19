#include <doctest.h>

#include <string>

#include "gpfsched/config.hpp"

using namespace gpfsched;

TEST_CASE("an empty document keeps the defaults") {
  SimulationConfig cfg;
  CHECK(parse_config("", cfg).empty());
  CHECK(cfg.num_ues == 10);
  CHECK(cfg.num_rbs == 100);
  CHECK(cfg.total_bandwidth_hz == 18e6);
  CHECK(cfg.gpf_alpha == std::vector<double>{0.2, 1.0});
  CHECK(cfg.seeds.size() == 10);
  CHECK(validate_config(cfg).empty());
}

TEST_CASE("every key parses") {
  const std::string text = R"(# full document
num_ues = 4
num_rbs = 20
numerology = 30e3
total_bandwidth_hz = 9e6
cell_radius_m = 250
pathloss_exponent = 3.5
ref_distance_m = 2
min_distance_m = 5
tx_power_w = 0.5
noise_power_w = 1e-13
ewma_epsilon = 0.8
gpf_alpha = 0.2, 0.6, 1.0
num_slots = 400
warmup_fraction = 0.25
seed = 11
tie_rule = seeded-random
solver = greedy
static_channel = true
)";
  SimulationConfig cfg;
  REQUIRE(parse_config(text, cfg).empty());
  CHECK(cfg.num_ues == 4);
  CHECK(cfg.num_rbs == 20);
  CHECK(cfg.numerology.uniform());
  CHECK(cfg.numerology.spacing_hz == 30e3);
  CHECK(cfg.total_bandwidth_hz == 9e6);
  CHECK(cfg.cell_radius_m == 250.0);
  CHECK(cfg.pathloss_exponent == 3.5);
  CHECK(cfg.ref_distance_m == 2.0);
  CHECK(cfg.min_distance_m == 5.0);
  CHECK(cfg.tx_power_w == 0.5);
  CHECK(cfg.noise_power_w == 1e-13);
  CHECK(cfg.ewma_epsilon == 0.8);
  CHECK(cfg.gpf_alpha == std::vector<double>{0.2, 0.6, 1.0});
  CHECK(cfg.num_slots == 400);
  CHECK(cfg.warmup_fraction == 0.25);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{11});
  CHECK(cfg.tie_rule == TieRule::seeded_random);
  CHECK(cfg.solver == SolverKind::greedy);
  CHECK(cfg.static_channel);
  CHECK(validate_config(cfg).empty());
}

TEST_CASE("mixed numerology parses into blocks") {
  SimulationConfig cfg;
  REQUIRE(parse_config("numerology = 15e3:60, 60e3:40\ntotal_bandwidth_hz = 40e6\n",
                       cfg)
              .empty());
  REQUIRE_FALSE(cfg.numerology.uniform());
  REQUIRE(cfg.numerology.blocks.size() == 2);
  CHECK(cfg.numerology.blocks[0] == std::pair<double, std::size_t>{15e3, 60});
  CHECK(cfg.numerology.blocks[1] == std::pair<double, std::size_t>{60e3, 40});
  CHECK(validate_config(cfg).empty());

  const auto grid = make_grid(cfg);
  CHECK(grid.num_rbs() == 100);
  CHECK(grid.bandwidth_of(0) == 180e3);
  CHECK(grid.bandwidth_of(99) == 720e3);
}

TEST_CASE("unknown and duplicate keys are rejected") {
  SimulationConfig cfg;
  const auto errors = parse_config(
      "num_ues = 4\nnum_uess = 5\nnum_ues = 6\nbogus = 1\n", cfg);
  REQUIRE(errors.size() == 3);
  CHECK(errors[0].find("unknown key 'num_uess'") != std::string::npos);
  CHECK(errors[1].find("duplicate key 'num_ues'") != std::string::npos);
  CHECK(errors[2].find("unknown key 'bogus'") != std::string::npos);
}

TEST_CASE("malformed values are reported per line") {
  SimulationConfig cfg;
  const auto errors = parse_config(
      "num_ues = four\newma_epsilon = maybe\ntie_rule = coin-flip\n", cfg);
  CHECK(errors.size() == 3);
}

TEST_CASE("validation lists every violation") {
  SimulationConfig cfg;
  cfg.num_ues = 0;
  cfg.ewma_epsilon = 1.5;
  cfg.warmup_fraction = 1.0;
  cfg.min_distance_m = 500.0;
  cfg.cell_radius_m = 100.0;
  cfg.gpf_alpha = {-1.0};
  const auto errors = validate_config(cfg);
  CHECK(errors.size() >= 5);
}

TEST_CASE("bandwidth budget violations are caught in validation") {
  SimulationConfig cfg;
  cfg.num_rbs = 101;  // 101 * 180 kHz > 18 MHz
  CHECK_FALSE(validate_config(cfg).empty());

  cfg.num_rbs = 100;
  cfg.numerology.blocks = {{15e3, 60}, {60e3, 40}};
  CHECK_FALSE(validate_config(cfg).empty());  // 39.6 MHz > 18 MHz
  cfg.total_bandwidth_hz = 40e6;
  CHECK(validate_config(cfg).empty());

  cfg.numerology.blocks = {{15e3, 60}, {60e3, 39}};
  CHECK_FALSE(validate_config(cfg).empty());  // counts must sum to num_rbs
}

TEST_CASE("the exhaustive solver is rejected at experiment scale") {
  SimulationConfig cfg;
  cfg.solver = SolverKind::exhaustive;
  CHECK_FALSE(validate_config(cfg).empty());

  cfg.num_ues = 3;
  cfg.num_rbs = 5;
  CHECK(validate_config(cfg).empty());
}

TEST_CASE("missing config files surface as errors") {
  SimulationConfig cfg;
  const auto errors = load_config_file("/nonexistent/path.cfg", cfg);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("cannot read") != std::string::npos);
}

TEST_CASE("enum names round-trip") {
  CHECK(solver_name(SolverKind::hnn) == "hnn");
  CHECK(solver_name(SolverKind::greedy) == "greedy");
  CHECK(solver_name(SolverKind::exhaustive) == "exhaustive");
  CHECK(tie_rule_name(TieRule::lowest_index) == "lowest-index");
  CHECK(tie_rule_name(TieRule::seeded_random) == "seeded-random");
}
