#include "crowdpipe/dataset_io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

namespace crowdpipe {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}

// json::get with the offending field named on type mismatch.
template <typename T>
T field(const json& obj, const char* name) {
  if (!obj.contains(name)) {
    throw ValidationError(std::string("missing field \"") + name + "\"");
  }
  try {
    return obj.at(name).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("field \"") + name + "\" has wrong type");
  }
}

BoundingBox box_from(const json& obj) {
  BoundingBox box{field<double>(obj, "x"), field<double>(obj, "y"),
                  field<double>(obj, "w"), field<double>(obj, "h")};
  validate_box(box);
  return box;
}

}  // namespace

MatchedDataset load_labeled(std::istream& in) {
  const json doc = parse_stream(in);
  if (!doc.is_object()) throw ValidationError("document root must be an object");

  MatchedDataset ds;
  ds.n_images = field<std::int64_t>(doc, "n_images");
  ds.n_ground_truth = field<std::int64_t>(doc, "n_ground_truth");
  if (!doc.contains("detections") || !doc.at("detections").is_array()) {
    throw ValidationError("field \"detections\" must be an array");
  }
  for (const auto& item : doc.at("detections")) {
    LabeledDetection d;
    d.id = field<std::int64_t>(item, "id");
    d.score = field<double>(item, "score");
    const auto label = field<std::string>(item, "label");
    if (label == "tp") {
      d.label = Label::TruePositive;
    } else if (label == "fp") {
      d.label = Label::FalsePositive;
    } else {
      throw ValidationError("field \"label\" must be \"tp\" or \"fp\", got \"" +
                            label + "\"");
    }
    ds.detections.push_back(d);
  }
  ds.validate();
  return ds;
}

void save_labeled(const MatchedDataset& ds, std::ostream& out) {
  json doc;
  doc["n_images"] = ds.n_images;
  doc["n_ground_truth"] = ds.n_ground_truth;
  auto& dets = doc["detections"] = json::array();
  for (const auto& d : ds.detections) {
    dets.push_back({{"id", d.id},
                    {"score", d.score},
                    {"label", d.label == Label::TruePositive ? "tp" : "fp"}});
  }
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failure while saving dataset");
}

RawDataset load_raw(std::istream& in) {
  const json doc = parse_stream(in);
  if (!doc.is_object() || !doc.contains("images") || !doc.at("images").is_array()) {
    throw ValidationError("document must contain an \"images\" array");
  }

  RawDataset raw;
  for (const auto& image : doc.at("images")) {
    const auto image_id = field<std::string>(image, "id");
    ++raw.n_images;
    if (image.contains("ground_truth")) {
      for (const auto& g : image.at("ground_truth")) {
        raw.ground_truth.push_back({image_id, box_from(g)});
      }
    }
    if (image.contains("detections")) {
      for (const auto& d : image.at("detections")) {
        const double score = field<double>(d, "score");
        if (!std::isfinite(score)) {
          throw ValidationError("detection score must be finite");
        }
        raw.detections.push_back({image_id, box_from(d), score});
      }
    }
  }
  return raw;
}

}  // namespace crowdpipe
