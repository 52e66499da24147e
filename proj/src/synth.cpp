#include "crowdpipe/synth.hpp"

#include <cmath>
#include <istream>
#include <random>

#include <json.hpp>

namespace crowdpipe {

void SynthConfig::validate() const {
  if (n_ground_truth < 0) throw ValidationError("n_ground_truth must be >= 0");
  if (n_detected_tp < 0) throw ValidationError("n_detected_tp must be >= 0");
  if (n_detected_tp > n_ground_truth) {
    throw ValidationError("n_detected_tp exceeds n_ground_truth");
  }
  if (n_fp < 0) throw ValidationError("n_fp must be >= 0");
  if (n_images < 1) throw ValidationError("n_images must be >= 1");
  for (const auto* d : {&tp_dist, &fp_dist}) {
    if (!(d->alpha > 0.0) || !(d->beta > 0.0)) {
      throw ValidationError("Beta distribution parameters must be > 0");
    }
  }
}

SynthConfig load_synth_config(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
  SynthConfig cfg;
  try {
    cfg.n_ground_truth = doc.at("n_ground_truth").get<std::int64_t>();
    cfg.n_detected_tp = doc.at("n_detected_tp").get<std::int64_t>();
    cfg.n_fp = doc.at("n_fp").get<std::int64_t>();
    cfg.n_images = doc.at("n_images").get<std::int64_t>();
    cfg.tp_dist = {doc.at("tp_dist").at("alpha").get<double>(),
                   doc.at("tp_dist").at("beta").get<double>()};
    cfg.fp_dist = {doc.at("fp_dist").at("alpha").get<double>(),
                   doc.at("fp_dist").at("beta").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

namespace {

// Beta(a,b) via two gamma draws, nudged strictly inside (0,1).
double beta_draw(const BetaParams& p, std::mt19937_64& rng) {
  std::gamma_distribution<double> ga(p.alpha, 1.0);
  std::gamma_distribution<double> gb(p.beta, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  double v = x / (x + y);
  if (!(v > 0.0)) v = std::nextafter(0.0, 1.0);
  if (!(v < 1.0)) v = std::nextafter(1.0, 0.0);
  return v;
}

}  // namespace

MatchedDataset generate(const SynthConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  std::mt19937_64 rng(seed);

  MatchedDataset ds;
  ds.n_ground_truth = cfg.n_ground_truth;
  ds.n_images = cfg.n_images;
  ds.detections.reserve(static_cast<std::size_t>(cfg.n_detected_tp + cfg.n_fp));
  std::int64_t next_id = 1;
  for (std::int64_t i = 0; i < cfg.n_detected_tp; ++i) {
    ds.detections.push_back(
        {next_id++, beta_draw(cfg.tp_dist, rng), Label::TruePositive});
  }
  for (std::int64_t i = 0; i < cfg.n_fp; ++i) {
    ds.detections.push_back(
        {next_id++, beta_draw(cfg.fp_dist, rng), Label::FalsePositive});
  }
  ds.validate();
  return ds;
}

}  // namespace crowdpipe
