// Times the threshold x budget sweep with the OpenMP path against the
// serial reference and verifies they agree bit-for-bit.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crowdpipe/optimizer.hpp"
#include "crowdpipe/synth.hpp"

using namespace crowdpipe;

namespace {

std::vector<double> lingrid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

template <typename F>
double time_it(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  SynthConfig cfg;
  cfg.n_ground_truth = 2000;
  cfg.n_detected_tp = 1800;
  cfg.n_fp = 3000;
  cfg.n_images = 500;
  cfg.tp_dist = {6.0, 2.0};
  cfg.fp_dist = {2.0, 4.0};
  const auto ds = generate(cfg, 42);

  const auto thresholds = lingrid(0.02, 0.98, 41);
  const auto budgets = lingrid(0.0, 10.0, 101);
  const SimOptions opts{SimOptions::Mode::Seeded, 42, 25};

  SweepSurface serial, parallel;
  const double t_serial = time_it([&] {
    serial = sweep(ds, thresholds, budgets, Ordering::Random,
                   WorkerModel::perfect(), 1.0, opts, false);
  });
  const double t_parallel = time_it([&] {
    parallel = sweep(ds, thresholds, budgets, Ordering::Random,
                     WorkerModel::perfect(), 1.0, opts, true);
  });

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("grid: %zu thresholds x %zu budgets, %d MC reps per cell\n",
              thresholds.size(), budgets.size(), opts.reps);
  std::printf("serial reference: %8.3f s\n", t_serial);
  std::printf("openmp (%2d thr):  %8.3f s  (%.2fx)\n", threads, t_parallel,
              t_serial / t_parallel);
  std::printf("results identical: %s\n",
              serial.f == parallel.f ? "yes" : "NO - MISMATCH");
  return serial.f == parallel.f ? 0 : 1;
}
