#pragma once

#include <cstdint>
#include <vector>

#include "crowdpipe/dataset.hpp"

namespace crowdpipe {

struct MatchConfig {
  double iou_threshold = 0.5;  // in (0, 1]
};

// Intersection area over union area for axis-aligned boxes; in [0,1].
double iou(const BoundingBox& a, const BoundingBox& b);

// Greedy score-descending matching with single-use ground truth.
// Each detection is matched to the unmatched same-image ground-truth
// object of highest IoU; a match at or above cfg.iou_threshold labels it
// TruePositive, anything else FalsePositive. Score ties break by input
// order. Detection ids are assigned by input order starting at 1.
MatchedDataset match_detections(const std::vector<RawDetection>& dets,
                                const std::vector<GroundTruthObject>& gts,
                                std::int64_t n_images, const MatchConfig& cfg);

}  // namespace crowdpipe
