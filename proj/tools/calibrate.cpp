// Scripted search for the default synthetic detector parameters.
//
// Scans a parameter grid and keeps configurations whose machine-only
// F-measure at threshold 0.5 lands on 0.80, whose confidence-ascending
// ordering reaches F = 0.90 strictly cheaper than the exact random
// baseline with at least 25% savings, and whose machine-optimal threshold
// differs from the grid minimum (so the envelope can move). Prints the
// best configuration as a config document plus its measured statistics;
// the checked-in data/default_synth.json is the frozen output of this
// search at seed 42.

#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "crowdpipe/metrics.hpp"
#include "crowdpipe/optimizer.hpp"
#include "crowdpipe/synth.hpp"

using namespace crowdpipe;

namespace {

constexpr std::uint64_t kSeed = 42;

std::vector<double> lingrid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

struct Candidate {
  SynthConfig cfg;
  double machine_f = 0.0;
  double random_budget = 0.0;
  double ascending_budget = 0.0;
  double measured_savings = 0.0;
};

std::optional<Candidate> evaluate(const SynthConfig& cfg) {
  const auto ds = generate(cfg, kSeed);

  Candidate cand{cfg};
  cand.machine_f = prf(confusion_at_threshold(ds, {0.5})).f_measure;
  if (std::abs(cand.machine_f - 0.80) > 0.015) return std::nullopt;

  const auto pool = confusion_at_threshold(ds, {0.5});
  const double budget_max =
      static_cast<double>(pool.tp + pool.fp) / static_cast<double>(ds.n_images);
  const auto budgets = lingrid(0.0, budget_max, 201);

  const SimOptions exact{SimOptions::Mode::ExactRandom, kSeed, 1};
  const SimOptions single{SimOptions::Mode::Seeded, kSeed, 1};
  const auto random_curve = cost_accuracy_curve(
      ds, {0.5}, Ordering::Random, WorkerModel::perfect(), budgets, 1.0, exact);
  const auto asc_curve =
      cost_accuracy_curve(ds, {0.5}, Ordering::ConfidenceAscending,
                          WorkerModel::perfect(), budgets, 1.0, single);

  const auto rb = budget_to_reach(random_curve, 0.90);
  const auto ab = budget_to_reach(asc_curve, 0.90);
  if (!rb || !ab || !(*ab < *rb)) return std::nullopt;
  cand.random_budget = *rb;
  cand.ascending_budget = *ab;
  cand.measured_savings = savings(*rb, *ab);
  if (cand.measured_savings < 0.25) return std::nullopt;

  // the machine-optimal threshold must not already sit at the grid minimum,
  // otherwise the envelope has nowhere to move under budget
  double lo = 1.0, hi = 0.0;
  for (const auto& d : ds.detections) {
    lo = std::min(lo, d.score);
    hi = std::max(hi, d.score);
  }
  const auto tgrid = lingrid(lo, hi, 21);
  double best_f = -1.0, best_t = tgrid.front();
  for (const double t : tgrid) {
    const double f = prf(confusion_at_threshold(ds, {t})).f_measure;
    if (f >= best_f) {
      best_f = f;
      best_t = t;
    }
  }
  if (best_t <= tgrid.front()) return std::nullopt;

  return cand;
}

}  // namespace

int main() {
  std::optional<Candidate> best;
  long long tried = 0;

  SynthConfig cfg;
  cfg.n_ground_truth = 200;
  cfg.n_images = 100;
  for (std::int64_t detected = 170; detected <= 195; detected += 5) {
    for (double ta = 3.0; ta <= 8.0; ta += 1.0) {
      for (double tb : {1.5, 2.0, 2.5}) {
        for (std::int64_t nfp = 100; nfp <= 600; nfp += 50) {
          for (double fa : {1.5, 2.0}) {
            for (double fb : {3.0, 4.0, 5.0}) {
              cfg.n_detected_tp = detected;
              cfg.n_fp = nfp;
              cfg.tp_dist = {ta, tb};
              cfg.fp_dist = {fa, fb};
              ++tried;
              const auto cand = evaluate(cfg);
              if (!cand) continue;
              if (!best || std::abs(cand->machine_f - 0.80) <
                               std::abs(best->machine_f - 0.80)) {
                best = cand;
              }
            }
          }
        }
      }
    }
  }

  if (!best) {
    std::fprintf(stderr, "no configuration satisfied the targets (%lld tried)\n",
                 tried);
    return 1;
  }

  const auto& c = *best;
  std::printf(
      "{\n"
      "  \"n_ground_truth\": %lld,\n"
      "  \"n_detected_tp\": %lld,\n"
      "  \"n_fp\": %lld,\n"
      "  \"n_images\": %lld,\n"
      "  \"tp_dist\": {\"alpha\": %g, \"beta\": %g},\n"
      "  \"fp_dist\": {\"alpha\": %g, \"beta\": %g}\n"
      "}\n",
      static_cast<long long>(c.cfg.n_ground_truth),
      static_cast<long long>(c.cfg.n_detected_tp),
      static_cast<long long>(c.cfg.n_fp),
      static_cast<long long>(c.cfg.n_images), c.cfg.tp_dist.alpha,
      c.cfg.tp_dist.beta, c.cfg.fp_dist.alpha, c.cfg.fp_dist.beta);
  std::fprintf(stderr,
               "machine-only F at 0.5: %.4f\n"
               "budget to F>=0.90, random exact: %.4f per image\n"
               "budget to F>=0.90, confidence-ascending: %.4f per image\n"
               "savings: %.1f%%  (%lld configurations tried)\n",
               c.machine_f, c.random_budget, c.ascending_budget,
               100.0 * c.measured_savings, tried);
  return 0;
}
