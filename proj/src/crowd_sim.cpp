#include "crowdpipe/crowd_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "crowdpipe/rng.hpp"

namespace crowdpipe {

std::int64_t inspections_for(const BudgetSpec& b, std::int64_t n_images,
                             std::int64_t pool_size) {
  const double affordable =
      std::floor(b.budget * static_cast<double>(n_images) / b.cost_per_inspection);
  if (affordable >= static_cast<double>(pool_size)) return pool_size;
  return static_cast<std::int64_t>(affordable);
}

std::int64_t inspections_for(const BudgetSpec& b, const MatchedDataset& ds,
                             std::int64_t pool_size) {
  return inspections_for(b, ds.n_images, pool_size);
}

std::vector<std::size_t> order_tasks(std::span<const LabeledDetection> pool,
                                     Ordering strategy, std::uint64_t seed) {
  std::vector<std::size_t> perm(pool.size());
  std::iota(perm.begin(), perm.end(), 0);

  const auto by_score_asc = [&](std::size_t a, std::size_t b) {
    if (pool[a].score != pool[b].score) return pool[a].score < pool[b].score;
    return pool[a].id < pool[b].id;
  };

  switch (strategy) {
    case Ordering::Random: {
      std::mt19937_64 rng(seed);
      std::shuffle(perm.begin(), perm.end(), rng);
      break;
    }
    case Ordering::ConfidenceAscending:
      std::sort(perm.begin(), perm.end(), by_score_asc);
      break;
    case Ordering::ConfidenceDescending:
      std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (pool[a].score != pool[b].score) return pool[a].score > pool[b].score;
        return pool[a].id < pool[b].id;
      });
      break;
    case Ordering::OracleFpFirst:
      std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        const bool a_fp = pool[a].label == Label::FalsePositive;
        const bool b_fp = pool[b].label == Label::FalsePositive;
        if (a_fp != b_fp) return a_fp;
        return by_score_asc(a, b);
      });
      break;
  }
  return perm;
}

ConfusionCounts simulate_verification(std::span<const LabeledDetection> pool,
                                      const std::vector<std::size_t>& perm,
                                      std::int64_t k, const WorkerModel& worker,
                                      std::uint64_t seed,
                                      std::int64_t n_ground_truth) {
  if (k < 0 || k > static_cast<std::int64_t>(pool.size())) {
    throw std::out_of_range("inspection count k out of range");
  }
  if (perm.size() != pool.size()) {
    throw std::invalid_argument("permutation size does not match pool");
  }
  std::vector<bool> seen(pool.size(), false);
  for (const std::size_t idx : perm) {
    if (idx >= pool.size() || seen[idx]) {
      throw std::invalid_argument("invalid permutation over pool");
    }
    seen[idx] = true;
  }

  ConfusionCounts c;
  c.n_ground_truth = n_ground_truth;
  for (const auto& d : pool) {
    (d.label == Label::TruePositive ? c.tp : c.fp)++;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::int64_t i = 0; i < k; ++i) {
    const auto& d = pool[perm[static_cast<std::size_t>(i)]];
    if (d.label == Label::FalsePositive) {
      if (worker.kind == WorkerModel::Kind::Noisy && unit(rng) < worker.p_miss_fp) {
        continue;  // wrongly kept
      }
      --c.fp;
    } else {
      if (worker.kind == WorkerModel::Kind::Noisy && unit(rng) < worker.p_drop_tp) {
        --c.tp;  // wrongly removed
      }
    }
  }
  return c;
}

namespace {

double log_choose(std::int64_t n, std::int64_t r) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(r) + 1.0) -
         std::lgamma(static_cast<double>(n - r) + 1.0);
}

// Probability that j of the k inspected tasks are false positives, out of
// N = tp + fp tasks of which K = fp are false.
double hypergeom_pmf(std::int64_t j, std::int64_t N, std::int64_t K,
                     std::int64_t k) {
  return std::exp(log_choose(K, j) + log_choose(N - K, k - j) - log_choose(N, k));
}

}  // namespace

PrfMetrics expected_prf_random(const ConfusionCounts& c, std::int64_t k) {
  const std::int64_t N = c.tp + c.fp;
  if (k < 0 || k > N) throw std::out_of_range("inspection count k out of range");

  PrfMetrics expected{0.0, 0.0, 0.0};
  const std::int64_t j_lo = std::max<std::int64_t>(0, k - c.tp);
  const std::int64_t j_hi = std::min(k, c.fp);
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    const double p = hypergeom_pmf(j, N, c.fp, k);
    const PrfMetrics m = prf({c.tp, c.fp - j, c.n_ground_truth});
    expected.precision += p * m.precision;
    expected.recall += p * m.recall;
    expected.f_measure += p * m.f_measure;
  }
  return expected;
}

double expected_f_random(const ConfusionCounts& c, std::int64_t k) {
  return expected_prf_random(c, k).f_measure;
}

}  // namespace crowdpipe
