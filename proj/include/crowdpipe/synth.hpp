#pragma once

#include <cstdint>
#include <iosfwd>

#include "crowdpipe/dataset.hpp"

namespace crowdpipe {

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;
};

// Parametric model of detector output: of n_ground_truth objects the
// detector finds n_detected_tp at any threshold; the remainder are missed
// outright and cap achievable recall. Scores are Beta-distributed on (0,1).
struct SynthConfig {
  std::int64_t n_ground_truth = 0;
  std::int64_t n_detected_tp = 0;
  std::int64_t n_fp = 0;
  std::int64_t n_images = 1;
  BetaParams tp_dist;
  BetaParams fp_dist;

  void validate() const;  // throws ValidationError
};

// Config document:
//   { "n_ground_truth":…, "n_detected_tp":…, "n_fp":…, "n_images":…,
//     "tp_dist":{"alpha":…,"beta":…}, "fp_dist":{"alpha":…,"beta":…} }
SynthConfig load_synth_config(std::istream& in);

// Deterministic given seed; ids are sequential from 1, true positives first.
MatchedDataset generate(const SynthConfig& cfg, std::uint64_t seed);

}  // namespace crowdpipe
