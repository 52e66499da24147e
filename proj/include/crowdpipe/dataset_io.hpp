#pragma once

#include <iosfwd>

#include "crowdpipe/dataset.hpp"

namespace crowdpipe {

// Labeled-dataset document:
//   { "n_images": int, "n_ground_truth": int,
//     "detections": [ {"id": int, "score": number, "label": "tp"|"fp"}, ... ] }
MatchedDataset load_labeled(std::istream& in);

// save_labeled followed by load_labeled reproduces the dataset exactly;
// scores are encoded with a round-trip-safe decimal representation.
void save_labeled(const MatchedDataset& ds, std::ostream& out);

// Raw-detection document:
//   { "images": [ {"id": string,
//       "ground_truth": [ {"x","y","w","h"}, ... ],
//       "detections":  [ {"x","y","w","h","score"}, ... ] }, ... ] }
RawDataset load_raw(std::istream& in);

}  // namespace crowdpipe
