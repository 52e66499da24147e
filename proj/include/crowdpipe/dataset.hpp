#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crowdpipe {

// Raised when an input document or constructed dataset violates an
// invariant; the message names the offending field.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BoundingBox {
  double x = 0.0;  // left edge, pixels
  double y = 0.0;  // top edge, pixels
  double w = 0.0;
  double h = 0.0;
};

// Throws ValidationError unless w > 0, h > 0 and all fields are finite.
void validate_box(const BoundingBox& box);

struct RawDetection {
  std::string image_id;
  BoundingBox box;
  double score = 0.0;  // detector confidence, any finite real
};

struct GroundTruthObject {
  std::string image_id;
  BoundingBox box;
};

enum class Label { TruePositive, FalsePositive };

// One machine detection with its known true/false status; the unit of
// human verification work.
struct LabeledDetection {
  std::int64_t id = 0;
  double score = 0.0;
  Label label = Label::FalsePositive;

  friend bool operator==(const LabeledDetection&, const LabeledDetection&) = default;
};

// A full experiment instance: labeled detections plus the dataset-wide
// ground-truth object count. Immutable after construction.
struct MatchedDataset {
  std::vector<LabeledDetection> detections;
  std::int64_t n_ground_truth = 0;
  std::int64_t n_images = 1;

  std::int64_t true_positive_count() const;

  // Throws ValidationError on duplicate ids, tp count > n_ground_truth,
  // n_images < 1, or non-finite scores.
  void validate() const;

  friend bool operator==(const MatchedDataset&, const MatchedDataset&) = default;
};

// Contents of a raw-detection document.
struct RawDataset {
  std::vector<RawDetection> detections;
  std::vector<GroundTruthObject> ground_truth;
  std::int64_t n_images = 0;
};

}  // namespace crowdpipe
