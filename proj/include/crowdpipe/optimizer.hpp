#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crowdpipe/crowd_sim.hpp"
#include "crowdpipe/dataset.hpp"
#include "crowdpipe/metrics.hpp"

namespace crowdpipe {

struct CurvePoint {
  double budget = 0.0;  // time per image
  std::int64_t inspected = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

// F-measure over a threshold x budget grid, with the per-budget maximum
// (envelope_f) and a maximizing threshold (envelope_t, ties toward the
// largest threshold).
struct SweepSurface {
  std::vector<double> thresholds;  // ascending
  std::vector<double> budgets;     // ascending
  std::vector<double> f;           // row-major [threshold][budget]
  std::vector<double> envelope_f;
  std::vector<double> envelope_t;

  double at(std::size_t t_idx, std::size_t b_idx) const {
    return f[t_idx * budgets.size() + b_idx];
  }
};

// How stochastic points are evaluated. ExactRandom computes the closed-form
// expectation (Random ordering, perfect worker only); Seeded averages reps
// simulated runs for Random and does a single run for deterministic
// orderings.
struct SimOptions {
  enum class Mode { ExactRandom, Seeded };
  Mode mode = Mode::ExactRandom;
  std::uint64_t seed = 0;
  int reps = 1;
};

std::vector<CurvePoint> cost_accuracy_curve(const MatchedDataset& ds, Threshold t,
                                            Ordering strategy,
                                            const WorkerModel& worker,
                                            const std::vector<double>& budgets,
                                            double cost_per_inspection,
                                            const SimOptions& opts);

// Evaluates every grid cell independently with a seed derived from
// (opts.seed, threshold index, budget index), so the parallel and serial
// paths are bit-identical.
SweepSurface sweep(const MatchedDataset& ds, const std::vector<double>& thresholds,
                   const std::vector<double>& budgets, Ordering strategy,
                   const WorkerModel& worker, double cost_per_inspection,
                   const SimOptions& opts, bool parallel = true);

// Smallest grid budget whose f_measure reaches f_target, if any.
std::optional<double> budget_to_reach(const std::vector<CurvePoint>& curve,
                                      double f_target);

// 1 - improved_budget / baseline_budget. Throws std::invalid_argument when
// baseline_budget <= 0.
double savings(double baseline_budget, double improved_budget);

}  // namespace crowdpipe
