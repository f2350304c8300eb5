// Times the serial reference tables against the OpenMP kernels on random
// strict instances and checks that both produce the same table.
//
//   tempex_kernel_bench [--n N] [--L L] [--k K] [--p P] [--seed S] [--threads T] [--reps R]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <vector>

#include "CLI11.hpp"
#include "tempex/colour_coding.hpp"
#include "tempex/generators.hpp"
#include "tempex/tour_dp.hpp"

using namespace tempex;

namespace {

template <class F>
double median_millis(int reps, F&& run) {
  std::vector<double> times;
  for (int i = 0; i < reps; ++i) {
    const auto begin = std::chrono::steady_clock::now();
    run();
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void row(const char* kernel, const char* variant, int threads, double millis, double base, bool same) {
  std::cout << std::left << std::setw(12) << kernel << std::setw(10) << variant << std::right << std::setw(8)
            << threads << std::setw(12) << std::fixed << std::setprecision(2) << millis << std::setw(10)
            << base / millis << std::setw(8) << (same ? "yes" : "NO") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel DP kernels"};
  Vertex n = 96;
  Time lifetime = 128;
  int k = 10;
  double p = 0.03;
  std::uint64_t seed = 1;
  int max_threads = omp_get_max_threads();
  int reps = 3;
  app.add_option("--n", n);
  app.add_option("--L", lifetime);
  app.add_option("--k", k);
  app.add_option("--p", p);
  app.add_option("--seed", seed);
  app.add_option("--threads", max_threads);
  app.add_option("--reps", reps);
  CLI11_PARSE(app, argc, argv);

  const auto g = random_strict_graph(n, lifetime, p, seed);
  const StrictProvider provider(g);
  std::vector<Vertex> targets(static_cast<std::size_t>(k));
  std::iota(targets.begin(), targets.end(), 1);
  const auto colouring = random_colouring(n, k, seed, 0);

  std::cout << "n=" << n << " L=" << lifetime << " k=" << k << " p=" << p << " time-edges=" << g.time_edge_count()
            << '\n';
  std::cout << std::left << std::setw(12) << "kernel" << std::setw(10) << "variant" << std::right << std::setw(8)
            << "threads" << std::setw(12) << "millis" << std::setw(10) << "speedup" << std::setw(8) << "same"
            << '\n';

  DpTableFixed fixed_ref;
  const double fixed_base = median_millis(reps, [&] { fixed_ref = compute_fixed_table_serial(provider, 0, targets); });
  row("fixed", "serial", 1, fixed_base, fixed_base, true);
  for (int t = 1; t <= max_threads; t *= 2) {
    DpTableFixed table;
    const double ms = median_millis(reps, [&] { table = compute_fixed_table(provider, 0, targets, {t}); });
    row("fixed", "openmp", t, ms, fixed_base, table.value == fixed_ref.value && table.pred == fixed_ref.pred);
  }

  DpTableColourful colour_ref;
  const double colour_base =
      median_millis(reps, [&] { colour_ref = compute_colourful_table_serial(provider, 0, colouring); });
  row("colourful", "serial", 1, colour_base, colour_base, true);
  for (int t = 1; t <= max_threads; t *= 2) {
    DpTableColourful table;
    const double ms = median_millis(reps, [&] { table = compute_colourful_table(provider, 0, colouring, {t}); });
    row("colourful", "openmp", t, ms, colour_base, table.value == colour_ref.value && table.pred == colour_ref.pred);
  }
  return 0;
}
