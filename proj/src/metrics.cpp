#include "crowdpipe/metrics.hpp"

namespace crowdpipe {

ConfusionCounts confusion_at_threshold(const MatchedDataset& ds, Threshold t) {
  ConfusionCounts c;
  c.n_ground_truth = ds.n_ground_truth;
  for (const auto& d : ds.detections) {
    if (d.score < t.value) continue;
    if (d.label == Label::TruePositive) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  return c;
}

PrfMetrics prf(const ConfusionCounts& c) {
  PrfMetrics m;
  const std::int64_t returned = c.tp + c.fp;
  m.precision = returned == 0 ? 1.0 : static_cast<double>(c.tp) / returned;
  m.recall = c.n_ground_truth == 0
                 ? 1.0
                 : static_cast<double>(c.tp) / c.n_ground_truth;
  const double pr = m.precision + m.recall;
  m.f_measure = pr == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / pr;
  return m;
}

}  // namespace crowdpipe
