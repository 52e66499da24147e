#include "crowdpipe/matching.hpp"

#include <algorithm>
#include <numeric>

namespace crowdpipe {

double iou(const BoundingBox& a, const BoundingBox& b) {
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  if (inter <= 0.0) return 0.0;
  const double uni = a.w * a.h + b.w * b.h - inter;
  return inter / uni;
}

MatchedDataset match_detections(const std::vector<RawDetection>& dets,
                                const std::vector<GroundTruthObject>& gts,
                                std::int64_t n_images, const MatchConfig& cfg) {
  // Descending score, ties by input order.
  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return dets[i].score > dets[j].score;
  });

  std::vector<bool> gt_used(gts.size(), false);
  std::vector<Label> labels(dets.size(), Label::FalsePositive);
  for (const std::size_t di : order) {
    const auto& det = dets[di];
    double best_iou = 0.0;
    std::size_t best_gt = gts.size();
    for (std::size_t gi = 0; gi < gts.size(); ++gi) {
      if (gt_used[gi] || gts[gi].image_id != det.image_id) continue;
      const double overlap = iou(det.box, gts[gi].box);
      if (overlap > best_iou) {
        best_iou = overlap;
        best_gt = gi;
      }
    }
    if (best_gt < gts.size() && best_iou >= cfg.iou_threshold) {
      gt_used[best_gt] = true;
      labels[di] = Label::TruePositive;
    }
  }

  MatchedDataset ds;
  ds.n_ground_truth = static_cast<std::int64_t>(gts.size());
  ds.n_images = n_images;
  ds.detections.reserve(dets.size());
  for (std::size_t i = 0; i < dets.size(); ++i) {
    ds.detections.push_back(
        {static_cast<std::int64_t>(i) + 1, dets[i].score, labels[i]});
  }
  ds.validate();
  return ds;
}

}  // namespace crowdpipe
