// Timing comparison of the OpenMP kernels against their serial references.
// Also checks that both paths produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "guessing/analytic.hpp"
#include "guessing/discrete.hpp"
#include "guessing/rng.hpp"
#include "guessing/series.hpp"
#include "guessing/verify.hpp"

using namespace guessing;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename Fn>
double time_best_of(Fn&& fn, int reps) {
  double best = 1e30;
  for (int i = 0; i < reps; ++i) {
    double t0 = now_seconds();
    fn();
    best = std::min(best, now_seconds() - t0);
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s, double max_diff) {
  std::printf("%-34s %10.1f ms %10.1f ms %7.2fx   max|diff| = %.3g\n", name,
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s, max_diff);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

int main() {
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    ApproxConfig cfg;
    cfg.grid_size = 1500;
    cfg.players = 3;
    cfg.rule = Rule::PriceIsRight;
    DiscreteProfile p;
    p.probs.assign(cfg.grid_size, 1.0 / cfg.grid_size);
    std::vector<double> vs, vp;
    double ts = time_best_of([&] { vs = best_response_values_serial(p, cfg); }, 3);
    double tp = time_best_of([&] { vp = best_response_values(p, cfg); }, 3);
    report("discrete best response (N=1500)", ts, tp, max_abs_diff(vs, vp));
  }

  {
    StrategyCdf f = StrategyCdf::series(solve_pir3());
    GameSpec spec(3, Rule::PriceIsRight);
    std::vector<double> grid;
    for (int i = 0; i < 512; ++i) grid.push_back(f.support_hi() * i / 511.0);
    std::vector<double> vs, vp;
    double ts = time_best_of([&] { vs = best_response_curve_serial(f, spec, grid); }, 3);
    double tp = time_best_of([&] { vp = best_response_curve(f, spec, grid); }, 3);
    report("best-response curve (512 pts)", ts, tp, max_abs_diff(vs, vp));
  }

  {
    StrategyCdf f = StrategyCdf::pir2_closed_form();
    GameSpec spec(2, Rule::PriceIsRight);
    McEstimate es, ep;
    long long samples = 20'000'000;
#ifdef _OPENMP
    int threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    double ts = time_best_of(
        [&] { es = monte_carlo_value(f, spec, 0.3, samples, 42); }, 3);
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    double tp = time_best_of(
        [&] { ep = monte_carlo_value(f, spec, 0.3, samples, 42); }, 3);
    report("monte carlo (2e7 samples)", ts, tp, std::abs(es.value - ep.value));
  }

  return 0;
}
