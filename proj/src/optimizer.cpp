#include "crowdpipe/optimizer.hpp"

#include <stdexcept>

#include "crowdpipe/rng.hpp"

namespace crowdpipe {

namespace {

std::vector<LabeledDetection> pool_at(const MatchedDataset& ds, Threshold t) {
  std::vector<LabeledDetection> pool;
  for (const auto& d : ds.detections) {
    if (d.score >= t.value) pool.push_back(d);
  }
  return pool;
}

ConfusionCounts pool_counts(const std::vector<LabeledDetection>& pool,
                            std::int64_t n_ground_truth) {
  ConfusionCounts c;
  c.n_ground_truth = n_ground_truth;
  for (const auto& d : pool) {
    (d.label == Label::TruePositive ? c.tp : c.fp)++;
  }
  return c;
}

// Per-threshold evaluation state. Orderings are computed once, statically,
// before inspection begins: deterministic strategies have a single
// permutation, Random in seeded mode draws one permutation per repetition
// and reuses them across every budget of the row.
struct PooledEvaluator {
  std::vector<LabeledDetection> pool;
  ConfusionCounts counts;
  std::vector<std::vector<std::size_t>> perms;

  PooledEvaluator(const MatchedDataset& ds, Threshold t, Ordering strategy,
                  const WorkerModel& worker, const SimOptions& opts,
                  std::uint64_t pool_seed)
      : pool(pool_at(ds, t)), counts(pool_counts(pool, ds.n_ground_truth)) {
    if (opts.mode == SimOptions::Mode::ExactRandom) {
      if (strategy != Ordering::Random ||
          worker.kind != WorkerModel::Kind::Perfect) {
        throw std::invalid_argument(
            "exact mode requires Random ordering and a perfect worker");
      }
      return;
    }
    const int reps = strategy == Ordering::Random ? std::max(1, opts.reps) : 1;
    perms.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
      perms.push_back(
          order_tasks(pool, strategy, mix_seed(pool_seed, static_cast<std::uint64_t>(r))));
    }
  }

  // One budget point; cell_seed feeds only the worker-noise draws.
  PrfMetrics evaluate(std::int64_t k, const WorkerModel& worker,
                      const SimOptions& opts, std::uint64_t cell_seed) const {
    if (opts.mode == SimOptions::Mode::ExactRandom) {
      return expected_prf_random(counts, k);
    }
    PrfMetrics mean{0.0, 0.0, 0.0};
    for (std::size_t r = 0; r < perms.size(); ++r) {
      const PrfMetrics m = prf(simulate_verification(
          pool, perms[r], k, worker, mix_seed(cell_seed, r), counts.n_ground_truth));
      mean.precision += m.precision;
      mean.recall += m.recall;
      mean.f_measure += m.f_measure;
    }
    const auto n = static_cast<double>(perms.size());
    mean.precision /= n;
    mean.recall /= n;
    mean.f_measure /= n;
    return mean;
  }
};

}  // namespace

std::vector<CurvePoint> cost_accuracy_curve(const MatchedDataset& ds, Threshold t,
                                            Ordering strategy,
                                            const WorkerModel& worker,
                                            const std::vector<double>& budgets,
                                            double cost_per_inspection,
                                            const SimOptions& opts) {
  const PooledEvaluator eval(ds, t, strategy, worker, opts, opts.seed);
  const auto pool_size = static_cast<std::int64_t>(eval.pool.size());

  std::vector<CurvePoint> curve;
  curve.reserve(budgets.size());
  for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
    const BudgetSpec spec{cost_per_inspection, budgets[bi]};
    const std::int64_t k = inspections_for(spec, ds, pool_size);
    const PrfMetrics m = eval.evaluate(k, worker, opts, mix_seed(opts.seed, bi));
    curve.push_back({budgets[bi], k, m.precision, m.recall, m.f_measure});
  }
  return curve;
}

SweepSurface sweep(const MatchedDataset& ds, const std::vector<double>& thresholds,
                   const std::vector<double>& budgets, Ordering strategy,
                   const WorkerModel& worker, double cost_per_inspection,
                   const SimOptions& opts, bool parallel) {
  if (thresholds.empty() || budgets.empty()) {
    throw std::invalid_argument("threshold and budget grids must be nonempty");
  }

  SweepSurface s;
  s.thresholds = thresholds;
  s.budgets = budgets;
  const auto nt = static_cast<std::int64_t>(thresholds.size());
  const auto nb = static_cast<std::int64_t>(budgets.size());
  s.f.assign(static_cast<std::size_t>(nt * nb), 0.0);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t ti = 0; ti < nt; ++ti) {
    const PooledEvaluator eval(ds, Threshold{thresholds[ti]}, strategy, worker,
                               opts, mix_seed(opts.seed, static_cast<std::uint64_t>(ti)));
    const auto pool_size = static_cast<std::int64_t>(eval.pool.size());
    for (std::int64_t bi = 0; bi < nb; ++bi) {
      const BudgetSpec spec{cost_per_inspection, budgets[bi]};
      const std::int64_t k = inspections_for(spec, ds, pool_size);
      const std::uint64_t cell_seed =
          mix_seed(opts.seed, static_cast<std::uint64_t>(ti),
                   static_cast<std::uint64_t>(bi));
      s.f[static_cast<std::size_t>(ti * nb + bi)] =
          eval.evaluate(k, worker, opts, cell_seed).f_measure;
    }
  }

  // Per-budget maximum; ties resolve to the largest threshold.
  s.envelope_f.assign(budgets.size(), 0.0);
  s.envelope_t.assign(budgets.size(), 0.0);
  for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
    double best_f = -1.0;
    double best_t = thresholds.front();
    for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
      const double f = s.at(ti, bi);
      if (f >= best_f) {
        best_f = f;
        best_t = thresholds[ti];
      }
    }
    s.envelope_f[bi] = best_f;
    s.envelope_t[bi] = best_t;
  }
  return s;
}

std::optional<double> budget_to_reach(const std::vector<CurvePoint>& curve,
                                      double f_target) {
  for (const auto& p : curve) {
    if (p.f_measure >= f_target) return p.budget;
  }
  return std::nullopt;
}

double savings(double baseline_budget, double improved_budget) {
  if (baseline_budget <= 0.0) {
    throw std::invalid_argument("baseline budget must be positive");
  }
  return 1.0 - improved_budget / baseline_budget;
}

}  // namespace crowdpipe
