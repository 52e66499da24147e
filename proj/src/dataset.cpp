#include "crowdpipe/dataset.hpp"

#include <cmath>
#include <unordered_set>

namespace crowdpipe {

void validate_box(const BoundingBox& box) {
  if (!std::isfinite(box.x) || !std::isfinite(box.y) || !std::isfinite(box.w) ||
      !std::isfinite(box.h)) {
    throw ValidationError("bounding box has non-finite field");
  }
  if (box.w <= 0.0) throw ValidationError("bounding box width must be > 0");
  if (box.h <= 0.0) throw ValidationError("bounding box height must be > 0");
}

std::int64_t MatchedDataset::true_positive_count() const {
  std::int64_t n = 0;
  for (const auto& d : detections) {
    if (d.label == Label::TruePositive) ++n;
  }
  return n;
}

void MatchedDataset::validate() const {
  if (n_images < 1) throw ValidationError("n_images must be >= 1");
  if (n_ground_truth < 0) throw ValidationError("n_ground_truth must be >= 0");
  std::unordered_set<std::int64_t> ids;
  ids.reserve(detections.size());
  for (const auto& d : detections) {
    if (!std::isfinite(d.score)) {
      throw ValidationError("detection " + std::to_string(d.id) +
                            " has non-finite score");
    }
    if (!ids.insert(d.id).second) {
      throw ValidationError("duplicate detection id " + std::to_string(d.id));
    }
  }
  if (true_positive_count() > n_ground_truth) {
    throw ValidationError("true-positive count " +
                          std::to_string(true_positive_count()) +
                          " exceeds n_ground_truth " +
                          std::to_string(n_ground_truth));
  }
}

}  // namespace crowdpipe
