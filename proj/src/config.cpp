#include "gpfsched/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "gpfsched/oracle.hpp"

namespace gpfsched {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_double(std::string_view s, double& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_unsigned(std::string_view s, std::uint64_t& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_bool(std::string_view s, bool& out) {
  if (s == "true" || s == "1") return out = true, true;
  if (s == "false" || s == "0") return out = false, true;
  return false;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    if (pos == std::string_view::npos) {
      parts.push_back(trim(s));
      return parts;
    }
    parts.push_back(trim(s.substr(0, pos)));
    s.remove_prefix(pos + 1);
  }
}

bool parse_numerology(std::string_view value, NumerologySpec& out,
                      std::string& error) {
  NumerologySpec spec;
  if (value.find(':') == std::string_view::npos) {
    if (!parse_double(value, spec.spacing_hz)) {
      error = "expected a spacing in Hz";
      return false;
    }
  } else {
    for (std::string_view part : split(value, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string_view::npos) {
        error = "mixed numerology entries must be spacing_hz:count";
        return false;
      }
      double spacing = 0.0;
      std::uint64_t count = 0;
      if (!parse_double(trim(part.substr(0, colon)), spacing) ||
          !parse_unsigned(trim(part.substr(colon + 1)), count)) {
        error = "malformed numerology entry '" + std::string(part) + "'";
        return false;
      }
      spec.blocks.emplace_back(spacing, static_cast<std::size_t>(count));
    }
  }
  out = spec;
  return true;
}

}  // namespace

std::vector<std::string> parse_config(std::string_view text, SimulationConfig& cfg) {
  std::vector<std::string> errors;
  std::set<std::string, std::less<>> seen;

  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                        : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_number;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto fail = [&](const std::string& what) {
      errors.push_back("line " + std::to_string(line_number) + ": " + what);
    };

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail("expected key = value");
      continue;
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      fail("expected key = value");
      continue;
    }
    if (!seen.insert(key).second) {
      fail("duplicate key '" + key + "'");
      continue;
    }

    auto expect_double = [&](double& field) {
      if (!parse_double(value, field)) fail("'" + key + "' expects a number");
    };
    auto expect_count = [&](std::size_t& field) {
      std::uint64_t v = 0;
      if (!parse_unsigned(value, v)) {
        fail("'" + key + "' expects a nonnegative integer");
      } else {
        field = static_cast<std::size_t>(v);
      }
    };

    if (key == "num_ues") {
      expect_count(cfg.num_ues);
    } else if (key == "num_rbs") {
      expect_count(cfg.num_rbs);
    } else if (key == "numerology") {
      std::string error;
      if (!parse_numerology(value, cfg.numerology, error)) fail(error);
    } else if (key == "total_bandwidth_hz") {
      expect_double(cfg.total_bandwidth_hz);
    } else if (key == "cell_radius_m") {
      expect_double(cfg.cell_radius_m);
    } else if (key == "pathloss_exponent") {
      expect_double(cfg.pathloss_exponent);
    } else if (key == "ref_distance_m") {
      expect_double(cfg.ref_distance_m);
    } else if (key == "min_distance_m") {
      expect_double(cfg.min_distance_m);
    } else if (key == "tx_power_w") {
      expect_double(cfg.tx_power_w);
    } else if (key == "noise_power_w") {
      expect_double(cfg.noise_power_w);
    } else if (key == "ewma_epsilon") {
      expect_double(cfg.ewma_epsilon);
    } else if (key == "gpf_alpha") {
      std::vector<double> alphas;
      bool ok = true;
      for (std::string_view part : split(value, ',')) {
        double alpha = 0.0;
        if (!parse_double(part, alpha)) {
          fail("'gpf_alpha' expects a number or a comma-separated list");
          ok = false;
          break;
        }
        alphas.push_back(alpha);
      }
      if (ok) cfg.gpf_alpha = std::move(alphas);
    } else if (key == "num_slots") {
      expect_count(cfg.num_slots);
    } else if (key == "warmup_fraction") {
      expect_double(cfg.warmup_fraction);
    } else if (key == "seed") {
      std::uint64_t seed = 0;
      if (!parse_unsigned(value, seed)) {
        fail("'seed' expects a nonnegative integer");
      } else {
        cfg.seeds = {seed};
      }
    } else if (key == "tie_rule") {
      if (value == "lowest-index") {
        cfg.tie_rule = TieRule::lowest_index;
      } else if (value == "seeded-random") {
        cfg.tie_rule = TieRule::seeded_random;
      } else {
        fail("'tie_rule' must be lowest-index or seeded-random");
      }
    } else if (key == "solver") {
      if (value == "hnn") {
        cfg.solver = SolverKind::hnn;
      } else if (value == "greedy") {
        cfg.solver = SolverKind::greedy;
      } else if (value == "exhaustive") {
        cfg.solver = SolverKind::exhaustive;
      } else {
        fail("'solver' must be hnn, greedy, or exhaustive");
      }
    } else if (key == "static_channel") {
      if (!parse_bool(value, cfg.static_channel)) {
        fail("'static_channel' expects true or false");
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return errors;
}

std::vector<std::string> validate_config(const SimulationConfig& cfg) {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
  };

  require(cfg.num_ues >= 1, "num_ues must be at least 1");
  require(cfg.num_rbs >= 1, "num_rbs must be at least 1");
  require(cfg.total_bandwidth_hz > 0.0, "total_bandwidth_hz must be positive");
  require(cfg.cell_radius_m > 0.0, "cell_radius_m must be positive");
  require(cfg.pathloss_exponent > 0.0, "pathloss_exponent must be positive");
  require(cfg.ref_distance_m > 0.0, "ref_distance_m must be positive");
  require(cfg.min_distance_m > 0.0, "min_distance_m must be positive");
  require(cfg.min_distance_m <= cfg.cell_radius_m,
          "min_distance_m must not exceed cell_radius_m");
  require(cfg.tx_power_w > 0.0, "tx_power_w must be positive");
  require(cfg.noise_power_w > 0.0, "noise_power_w must be positive");
  require(cfg.ewma_epsilon >= 0.0 && cfg.ewma_epsilon <= 1.0,
          "ewma_epsilon must lie in [0, 1]");
  require(!cfg.gpf_alpha.empty(), "gpf_alpha must name at least one value");
  for (double alpha : cfg.gpf_alpha) {
    require(alpha >= 0.0, "gpf_alpha values must be nonnegative");
  }
  require(cfg.num_slots >= 1, "num_slots must be at least 1");
  require(cfg.warmup_fraction >= 0.0 && cfg.warmup_fraction < 1.0,
          "warmup_fraction must lie in [0, 1)");
  require(!cfg.seeds.empty(), "at least one seed is required");

  if (cfg.numerology.uniform()) {
    require(is_allowed_spacing(cfg.numerology.spacing_hz),
            "numerology spacing is not an NR spacing");
    if (cfg.num_rbs >= 1 && is_allowed_spacing(cfg.numerology.spacing_hz)) {
      const double used = Numerology{cfg.numerology.spacing_hz}.rb_bandwidth_hz() *
                          static_cast<double>(cfg.num_rbs);
      require(used <= cfg.total_bandwidth_hz,
              "resource blocks exceed the bandwidth budget");
    }
  } else {
    std::size_t total_rbs = 0;
    double used = 0.0;
    bool spacings_ok = true;
    for (const auto& [spacing, count] : cfg.numerology.blocks) {
      if (!is_allowed_spacing(spacing)) spacings_ok = false;
      require(count >= 1, "numerology block counts must be at least 1");
      total_rbs += count;
      used += Numerology{spacing}.rb_bandwidth_hz() * static_cast<double>(count);
    }
    require(spacings_ok, "numerology spacing is not an NR spacing");
    require(total_rbs == cfg.num_rbs,
            "numerology block counts must sum to num_rbs");
    require(used <= cfg.total_bandwidth_hz,
            "resource blocks exceed the bandwidth budget");
  }

  if (cfg.solver == SolverKind::exhaustive && cfg.num_ues >= 1 && cfg.num_rbs >= 1) {
    // (num_ues + 1)^num_rbs upper-bounds the search space.
    double space = 1.0;
    for (std::size_t b = 0; b < cfg.num_rbs && space <= 1e18; ++b) {
      space *= static_cast<double>(cfg.num_ues + 1);
    }
    require(space <= static_cast<double>(oracle::kDefaultSearchGuard),
            "exhaustive solver is infeasible at this num_ues/num_rbs");
  }
  return errors;
}

std::vector<std::string> load_config_file(const std::filesystem::path& path,
                                          SimulationConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    return {"cannot read config file: " + path.string()};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::vector<std::string> errors = parse_config(buffer.str(), cfg);
  if (errors.empty()) errors = validate_config(cfg);
  return errors;
}

ResourceGrid make_grid(const SimulationConfig& cfg) {
  if (cfg.numerology.uniform()) {
    return build_grid(Numerology{cfg.numerology.spacing_hz}, cfg.num_rbs,
                      cfg.total_bandwidth_hz);
  }
  std::vector<NumerologyBlock> blocks;
  blocks.reserve(cfg.numerology.blocks.size());
  for (const auto& [spacing, count] : cfg.numerology.blocks) {
    blocks.push_back({Numerology{spacing}, count});
  }
  return build_grid(blocks, cfg.total_bandwidth_hz);
}

std::string solver_name(SolverKind solver) {
  switch (solver) {
    case SolverKind::hnn: return "hnn";
    case SolverKind::greedy: return "greedy";
    case SolverKind::exhaustive: return "exhaustive";
  }
  return "unknown";
}

std::string tie_rule_name(TieRule rule) {
  return rule == TieRule::lowest_index ? "lowest-index" : "seeded-random";
}

}  // namespace gpfsched
