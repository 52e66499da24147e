#pragma once

#include <cstdint>

#include "crowdpipe/dataset.hpp"

namespace crowdpipe {

// Detections with score >= value are returned (inclusive cutoff).
struct Threshold {
  double value = 0.0;
};

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t n_ground_truth = 0;

  std::int64_t fn() const { return n_ground_truth - tp; }

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct PrfMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

ConfusionCounts confusion_at_threshold(const MatchedDataset& ds, Threshold t);

// P = tp/(tp+fp), R = tp/G, F = 2PR/(P+R), with the conventions
// P := 1 when tp+fp = 0, R := 1 when G = 0, F := 0 when P+R = 0.
PrfMetrics prf(const ConfusionCounts& c);

}  // namespace crowdpipe
