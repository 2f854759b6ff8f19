// Benchmark comparing the serial reference kernels with their OpenMP
// variants, plus the experiment-level cell parallelism. Each section also
// checks that both paths produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gpfsched/hnn.hpp"
#include "gpfsched/kernels.hpp"
#include "gpfsched/oracle.hpp"
#include "gpfsched/rng.hpp"
#include "gpfsched/sim.hpp"

using namespace gpfsched;

namespace {

double time_ms(const std::function<void()>& fn, int iters) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < iters; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / iters;
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s serial %10.3f ms   openmp %10.3f ms   speedup %5.2fx   %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              match ? "results match" : "RESULTS DIFFER");
}

GainMatrix random_gains(std::size_t num_ues, std::size_t num_rbs,
                        std::uint64_t seed) {
  GainMatrix g(num_ues, num_rbs);
  for (std::size_t u = 0; u < num_ues; ++u) {
    for (std::size_t b = 0; b < num_rbs; ++b) {
      g.at(u, b) = rng::uniform01(rng::hash_key(seed, 0x67u, u, b));
    }
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t num_ues = 512;
  std::size_t num_rbs = 2048;
  int iters = 20;
  std::size_t bench_slots = 200;

  CLI::App app{"gpfsched kernel benchmark"};
  app.add_option("--ues", num_ues, "UEs for the kernel benchmarks");
  app.add_option("--rbs", num_rbs, "RBs for the kernel benchmarks");
  app.add_option("--iters", iters, "Iterations per measurement");
  app.add_option("--slots", bench_slots, "Slots for the experiment benchmark");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n\n");
#endif

  // Gain-matrix kernel. The grid bandwidth budget is sized to fit.
  const ResourceGrid grid =
      build_grid(Numerology{15e3}, num_rbs, 180e3 * static_cast<double>(num_rbs));
  std::vector<ChannelState> channels(num_ues);
  std::vector<double> averages(num_ues);
  for (std::size_t u = 0; u < num_ues; ++u) {
    channels[u] = {u, 0, 1.0, 1.0 + rng::uniform01(rng::hash_key(1, 0x73u, u))};
    averages[u] = 1e6 * (1.0 + rng::uniform01(rng::hash_key(2, 0x73u, u)));
  }
  const GpfParams params{1.0, 1.0};

  GainMatrix g_serial, g_parallel;
  const double gm_serial = time_ms(
      [&] { g_serial = kernels::build_gain_matrix_serial(channels, averages, grid, params); },
      iters);
  const double gm_parallel = time_ms(
      [&] { g_parallel = kernels::build_gain_matrix_parallel(channels, averages, grid, params); },
      iters);
  report("gain matrix build", gm_serial, gm_parallel, g_serial == g_parallel);

  // Winner-take-all kernel.
  const GainMatrix wta_scores = random_gains(num_ues, num_rbs, 7);
  std::vector<std::int32_t> wta_serial, wta_parallel;
  const double wta_serial_ms =
      time_ms([&] { wta_serial = kernels::wta_assign_serial(wta_scores, {}); }, iters);
  const double wta_parallel_ms =
      time_ms([&] { wta_parallel = kernels::wta_assign_parallel(wta_scores, {}); }, iters);
  report("winner-take-all assign", wta_serial_ms, wta_parallel_ms,
         wta_serial == wta_parallel);

  // Exhaustive enumeration (6^8 ~ 1.7M candidates).
  const GainMatrix small = random_gains(6, 8, 11);
  oracle::AllocationResult ex_serial, ex_parallel;
  const double ex_serial_ms = time_ms(
      [&] { ex_serial = oracle::exhaustive_allocate(small, oracle::kDefaultSearchGuard, Exec::serial); },
      std::max(1, iters / 4));
  const double ex_parallel_ms = time_ms(
      [&] { ex_parallel = oracle::exhaustive_allocate(small, oracle::kDefaultSearchGuard, Exec::parallel); },
      std::max(1, iters / 4));
  report("exhaustive search", ex_serial_ms, ex_parallel_ms,
         ex_serial.rb_to_ue == ex_parallel.rb_to_ue &&
             ex_serial.objective == ex_parallel.objective);

  // Experiment cells ((alpha, seed) replications).
  SimulationConfig cfg;
  cfg.num_slots = bench_slots;
  cfg.seeds = {0, 1, 2, 3};
  sim::RunArtifact exp_serial, exp_parallel;
  const double exp_serial_ms =
      time_ms([&] { exp_serial = sim::run_experiment(cfg, Exec::serial); }, 1);
  const double exp_parallel_ms =
      time_ms([&] { exp_parallel = sim::run_experiment(cfg, Exec::parallel); }, 1);
  report("experiment cells", exp_serial_ms, exp_parallel_ms,
         sim::slots_csv(exp_serial) == sim::slots_csv(exp_parallel));

  return 0;
}
