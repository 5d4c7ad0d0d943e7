// Timing comparison of the serial reference kernels against the OpenMP
// parallel ones. The outputs are bit-identical; only the wall time differs.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "anaprop/frank.hpp"
#include "anaprop/solver.hpp"

using namespace anaprop;
using clock_type = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(const F& fn, int repeats) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not available, both kernels run serially\n");
#endif

  const FrankParam p = frank_regime(2.0);
  const UnitValue a(0.01), b(0.2), c(0.3), lo(0.3), hi(1.0);
  const Quadruple q{UnitValue(0.1), UnitValue(0.3), UnitValue(0.5), UnitValue(0.7)};

  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

  for (int steps : {1 << 20, 1 << 23}) {
    volatile double sink = 0.0;
    const double ts = time_ms(
        [&] { sink = sweep_d_serial(p, a, b, c, lo, hi, steps).samples.back().diff; }, 3);
    const double tp =
        time_ms([&] { sink = sweep_d(p, a, b, c, lo, hi, steps).samples.back().diff; }, 3);
    (void)sink;
    std::printf("sweep_d steps=%-13d %12.2f %12.2f %8.2fx\n", steps, ts, tp, ts / tp);
  }

  for (int grid : {1 << 18, 1 << 21}) {
    SolverOptions opts;
    opts.grid_steps = grid;
    volatile double sink = 0.0;
    const double ts =
        time_ms([&] { sink = minimize_over_d_serial(p, a, b, c, lo, hi, opts).min_diff; }, 3);
    const double tp =
        time_ms([&] { sink = minimize_over_d(p, a, b, c, lo, hi, opts).min_diff; }, 3);
    (void)sink;
    std::printf("minimize grid=%-13d %12.2f %12.2f %8.2fx\n", grid, ts, tp, ts / tp);
  }

  for (int grid : {1 << 14, 1 << 16}) {
    SolverOptions opts;
    opts.grid_steps = grid;
    volatile double sink = 0.0;
    const double ts = time_ms([&] { sink = solve_p_serial(q, opts).best_residual; }, 3);
    const double tp = time_ms([&] { sink = solve_p(q, opts).best_residual; }, 3);
    (void)sink;
    std::printf("solve_p grid=%-14d %12.2f %12.2f %8.2fx\n", grid, ts, tp, ts / tp);
  }

  return 0;
}
