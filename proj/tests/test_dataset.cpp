#include <doctest.h>

#include <random>
#include <sstream>

#include "crowdpipe/dataset_io.hpp"

using namespace crowdpipe;

namespace {

MatchedDataset random_dataset(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ndist(0, 20);
  std::uniform_real_distribution<double> sdist(-5.0, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  MatchedDataset ds;
  const int n = ndist(rng);
  long long tp = 0;
  for (int i = 0; i < n; ++i) {
    const bool is_tp = unit(rng) < 0.5;
    tp += is_tp;
    ds.detections.push_back(
        {i + 1, sdist(rng), is_tp ? Label::TruePositive : Label::FalsePositive});
  }
  ds.n_ground_truth = tp + ndist(rng);
  ds.n_images = 1 + ndist(rng);
  return ds;
}

MatchedDataset roundtrip(const MatchedDataset& ds) {
  std::stringstream buf;
  save_labeled(ds, buf);
  return load_labeled(buf);
}

}  // namespace

TEST_CASE("load_labeled reads the stated document") {
  std::istringstream in(R"({
    "n_images": 2, "n_ground_truth": 3,
    "detections": [
      {"id": 1, "score": 0.9, "label": "tp"},
      {"id": 2, "score": 0.3, "label": "fp"}
    ]})");
  const auto ds = load_labeled(in);
  CHECK(ds.n_images == 2);
  CHECK(ds.n_ground_truth == 3);
  REQUIRE(ds.detections.size() == 2);
  CHECK(ds.detections[0] == LabeledDetection{1, 0.9, Label::TruePositive});
  CHECK(ds.detections[1] == LabeledDetection{2, 0.3, Label::FalsePositive});
}

TEST_CASE("load_labeled rejects invariant violations") {
  std::istringstream dup(R"({"n_images":1,"n_ground_truth":5,"detections":[
    {"id":1,"score":0.1,"label":"fp"},{"id":1,"score":0.2,"label":"fp"}]})");
  CHECK_THROWS_WITH_AS(load_labeled(dup), "duplicate detection id 1",
                       ValidationError);

  std::istringstream too_many_tp(R"({"n_images":1,"n_ground_truth":3,"detections":[
    {"id":1,"score":0.1,"label":"tp"},{"id":2,"score":0.2,"label":"tp"},
    {"id":3,"score":0.3,"label":"tp"},{"id":4,"score":0.4,"label":"tp"},
    {"id":5,"score":0.5,"label":"tp"}]})");
  CHECK_THROWS_AS(load_labeled(too_many_tp), ValidationError);

  std::istringstream bad_images(R"({"n_images":0,"n_ground_truth":0,"detections":[]})");
  CHECK_THROWS_AS(load_labeled(bad_images), ValidationError);

  std::istringstream garbage("not json at all");
  CHECK_THROWS_AS(load_labeled(garbage), ValidationError);
}

TEST_CASE("save/load round-trip is field-exact") {
  MatchedDataset ds;
  ds.detections = {{1, 0.1, Label::TruePositive}, {2, -3.25, Label::FalsePositive}};
  ds.n_ground_truth = 2;
  ds.n_images = 4;
  CHECK(roundtrip(ds) == ds);

  MatchedDataset empty;
  empty.n_ground_truth = 0;
  empty.n_images = 1;
  CHECK(roundtrip(empty) == empty);
}

TEST_CASE("round-trip property over random datasets") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto ds = random_dataset(rng);
    CHECK(roundtrip(ds) == ds);
  }
}

TEST_CASE("randomly corrupted documents never crash") {
  MatchedDataset ds;
  ds.detections = {{1, 0.5, Label::TruePositive}, {2, 0.25, Label::FalsePositive}};
  ds.n_ground_truth = 1;
  ds.n_images = 3;
  std::stringstream buf;
  save_labeled(ds, buf);
  const std::string doc = buf.str();

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> pos(0, doc.size() - 1);
  std::uniform_int_distribution<int> byte(32, 126);
  for (int i = 0; i < 300; ++i) {
    std::string corrupted = doc;
    corrupted[pos(rng)] = static_cast<char>(byte(rng));
    std::istringstream in(corrupted);
    try {
      const auto loaded = load_labeled(in);
      loaded.validate();
    } catch (const ValidationError&) {
      // structured error is the other acceptable outcome
    }
  }
}

TEST_CASE("load_raw parses images with boxes") {
  std::istringstream in(R"({"images":[
    {"id":"img0",
     "ground_truth":[{"x":0,"y":0,"w":10,"h":10}],
     "detections":[{"x":1,"y":1,"w":9,"h":9,"score":0.7}]}]})");
  const auto raw = load_raw(in);
  CHECK(raw.n_images == 1);
  REQUIRE(raw.detections.size() == 1);
  REQUIRE(raw.ground_truth.size() == 1);
  CHECK(raw.detections[0].score == 0.7);
  CHECK(raw.detections[0].image_id == "img0");
}

TEST_CASE("load_raw accepts empty detection lists and rejects bad boxes") {
  std::istringstream empty(R"({"images":[{"id":"a","ground_truth":[],"detections":[]}]})");
  const auto raw = load_raw(empty);
  CHECK(raw.n_images == 1);
  CHECK(raw.detections.empty());

  std::istringstream zero_w(R"({"images":[
    {"id":"a","detections":[{"x":0,"y":0,"w":0,"h":5,"score":1}]}]})");
  CHECK_THROWS_AS(load_raw(zero_w), ValidationError);
}
