#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crowdpipe/dataset.hpp"
#include "crowdpipe/metrics.hpp"

namespace crowdpipe {

enum class Ordering {
  Random,               // uniform seeded permutation (baseline)
  ConfidenceAscending,  // lowest machine confidence first
  ConfidenceDescending,
  OracleFpFirst,  // all false detections first; upper bound, labels visible
};

struct WorkerModel {
  enum class Kind { Perfect, Noisy };
  Kind kind = Kind::Perfect;
  double p_miss_fp = 0.0;  // inspected false detection wrongly kept
  double p_drop_tp = 0.0;  // inspected true detection wrongly removed

  static WorkerModel perfect() { return {}; }
  static WorkerModel noisy(double p_miss_fp, double p_drop_tp) {
    return {Kind::Noisy, p_miss_fp, p_drop_tp};
  }
};

// Human time available, expressed per image; total time is
// budget * n_images, each verification task costs cost_per_inspection.
struct BudgetSpec {
  double cost_per_inspection = 1.0;
  double budget = 0.0;
};

// Number of verification tasks the budget affords, capped at pool_size:
// min(floor(budget * n_images / cost_per_inspection), pool_size).
std::int64_t inspections_for(const BudgetSpec& b, const MatchedDataset& ds,
                             std::int64_t pool_size);
std::int64_t inspections_for(const BudgetSpec& b, std::int64_t n_images,
                             std::int64_t pool_size);

// Permutation of pool indices in presentation order. Confidence ties
// break by id ascending. Only OracleFpFirst consults labels.
std::vector<std::size_t> order_tasks(std::span<const LabeledDetection> pool,
                                     Ordering strategy, std::uint64_t seed);

// Inspect the first k items of perm. A perfect worker removes every
// inspected false detection and keeps every true one; a noisy worker errs
// with the configured probabilities, drawn independently from the seed.
// n_ground_truth passes through unchanged.
ConfusionCounts simulate_verification(std::span<const LabeledDetection> pool,
                                      const std::vector<std::size_t>& perm,
                                      std::int64_t k, const WorkerModel& worker,
                                      std::uint64_t seed,
                                      std::int64_t n_ground_truth);

// Exact expected F-measure after a perfect worker inspects k tasks drawn
// uniformly without replacement: the count of false positives among the
// inspected k is hypergeometric, so
//   E[F] = sum_j H(j; N=tp+fp, K=fp, k) * F(tp, fp - j, G).
double expected_f_random(const ConfusionCounts& c, std::int64_t k);

// Same expectation for all three metrics at once.
PrfMetrics expected_prf_random(const ConfusionCounts& c, std::int64_t k);

}  // namespace crowdpipe
