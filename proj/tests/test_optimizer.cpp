#include <doctest.h>

#include <random>

#include "crowdpipe/optimizer.hpp"
#include "crowdpipe/synth.hpp"

using namespace crowdpipe;

namespace {

MatchedDataset tiny_dataset() {
  MatchedDataset ds;
  ds.detections = {{1, 0.6, Label::TruePositive}, {2, 0.4, Label::FalsePositive}};
  ds.n_ground_truth = 2;
  ds.n_images = 1;
  return ds;
}

MatchedDataset random_synth_instance(std::uint64_t seed) {
  SynthConfig cfg;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> gdist(5, 40);
  cfg.n_ground_truth = gdist(rng);
  cfg.n_detected_tp = std::uniform_int_distribution<std::int64_t>(
      0, cfg.n_ground_truth)(rng);
  cfg.n_fp = gdist(rng);
  cfg.n_images = 10;
  cfg.tp_dist = {6.0, 2.0};
  cfg.fp_dist = {2.0, 4.0};
  return generate(cfg, seed);
}

std::vector<double> lingrid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

const SimOptions kExact{SimOptions::Mode::ExactRandom, 1, 1};

}  // namespace

TEST_CASE("zero budget point equals the machine-only metrics") {
  const auto ds = random_synth_instance(3);
  const Threshold t{0.5};
  const auto curve = cost_accuracy_curve(ds, t, Ordering::Random,
                                         WorkerModel::perfect(), {0.0}, 1.0,
                                         kExact);
  REQUIRE(curve.size() == 1);
  const auto machine = prf(confusion_at_threshold(ds, t));
  CHECK(curve[0].inspected == 0);
  CHECK(curve[0].f_measure == doctest::Approx(machine.f_measure).epsilon(1e-12));
  CHECK(curve[0].precision == doctest::Approx(machine.precision).epsilon(1e-12));
}

TEST_CASE("saturating budget removes every false positive") {
  const auto ds = random_synth_instance(4);
  const Threshold t{0.2};
  const auto pool = confusion_at_threshold(ds, t);
  const double saturating =
      static_cast<double>(pool.tp + pool.fp) / ds.n_images + 1.0;
  for (const auto strategy : {Ordering::ConfidenceAscending,
                              Ordering::ConfidenceDescending,
                              Ordering::OracleFpFirst}) {
    const auto curve = cost_accuracy_curve(ds, t, strategy,
                                           WorkerModel::perfect(), {saturating},
                                           1.0, {SimOptions::Mode::Seeded, 1, 1});
    const double want = prf({pool.tp, 0, pool.n_ground_truth}).f_measure;
    CHECK(curve[0].f_measure == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("exact random curve reproduces the two-item expectation") {
  const auto ds = tiny_dataset();
  // budget 1 at cost 1 on one image gives k = 1
  const auto curve = cost_accuracy_curve(
      ds, {-1e300}, Ordering::Random, WorkerModel::perfect(), {1.0}, 1.0, kExact);
  REQUIRE(curve.size() == 1);
  CHECK(curve[0].inspected == 1);
  CHECK(curve[0].f_measure == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("exact mode rejects non-random strategies") {
  const auto ds = tiny_dataset();
  CHECK_THROWS_AS(cost_accuracy_curve(ds, {0.0}, Ordering::ConfidenceAscending,
                                      WorkerModel::perfect(), {0.0}, 1.0, kExact),
                  std::invalid_argument);
  CHECK_THROWS_AS(cost_accuracy_curve(ds, {0.0}, Ordering::Random,
                                      WorkerModel::noisy(0.1, 0.0), {0.0}, 1.0,
                                      kExact),
                  std::invalid_argument);
}

TEST_CASE("sweep envelope dominates all cells and matches zero-budget prf") {
  const auto ds = random_synth_instance(11);
  const auto thresholds = lingrid(0.05, 0.95, 10);
  const auto budgets = lingrid(0.0, 12.0, 13);
  const auto s = sweep(ds, thresholds, budgets, Ordering::Random,
                       WorkerModel::perfect(), 1.0, kExact);

  for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
    for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
      CHECK(s.envelope_f[bi] >= s.at(ti, bi));
    }
  }
  for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
    const auto machine = prf(confusion_at_threshold(ds, {thresholds[ti]}));
    CHECK(s.at(ti, 0) == doctest::Approx(machine.f_measure).epsilon(1e-12));
    // perfect-worker rows are non-decreasing in budget
    for (std::size_t bi = 1; bi < budgets.size(); ++bi) {
      CHECK(s.at(ti, bi) >= s.at(ti, bi - 1) - 1e-12);
    }
  }
}

TEST_CASE("envelope argmax ties resolve to the largest threshold") {
  const auto ds = tiny_dataset();
  // both thresholds sit below every score, so their columns are identical
  const auto s = sweep(ds, {-2.0, -1.0}, {0.0, 5.0}, Ordering::Random,
                       WorkerModel::perfect(), 1.0, kExact);
  CHECK(s.envelope_t[0] == -1.0);
  CHECK(s.envelope_t[1] == -1.0);
}

TEST_CASE("single-threshold sweep equals that threshold's curve") {
  const auto ds = random_synth_instance(21);
  const auto budgets = lingrid(0.0, 8.0, 9);
  const auto s = sweep(ds, {0.4}, budgets, Ordering::Random,
                       WorkerModel::perfect(), 1.0, kExact);
  const auto curve = cost_accuracy_curve(ds, {0.4}, Ordering::Random,
                                         WorkerModel::perfect(), budgets, 1.0,
                                         kExact);
  for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
    CHECK(s.envelope_f[bi] == doctest::Approx(curve[bi].f_measure).epsilon(1e-12));
    CHECK(s.envelope_t[bi] == 0.4);
  }
}

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
  const auto ds = random_synth_instance(31);
  const auto thresholds = lingrid(0.1, 0.9, 15);
  const auto budgets = lingrid(0.0, 10.0, 21);
  for (const auto mode :
       {SimOptions{SimOptions::Mode::ExactRandom, 99, 1},
        SimOptions{SimOptions::Mode::Seeded, 99, 5}}) {
    const auto par = sweep(ds, thresholds, budgets, Ordering::Random,
                           WorkerModel::perfect(), 1.0, mode, true);
    const auto ser = sweep(ds, thresholds, budgets, Ordering::Random,
                           WorkerModel::perfect(), 1.0, mode, false);
    CHECK(par.f == ser.f);
    CHECK(par.envelope_f == ser.envelope_f);
    CHECK(par.envelope_t == ser.envelope_t);
  }
}

TEST_CASE("budget_to_reach scans the curve") {
  const std::vector<CurvePoint> curve{
      {0.0, 0, 0, 0, 0.8}, {10.0, 0, 0, 0, 0.85}, {20.0, 0, 0, 0, 0.92}};
  CHECK(budget_to_reach(curve, 0.9) == 20.0);
  CHECK(budget_to_reach(curve, 0.8) == 0.0);
  CHECK(!budget_to_reach(curve, 0.95).has_value());
}

TEST_CASE("savings ratio") {
  CHECK(savings(100.0, 37.1) == doctest::Approx(0.629).epsilon(1e-12));
  CHECK(savings(5.0, 5.0) == 0.0);
  CHECK(savings(5.0, 0.0) == 1.0);
  CHECK_THROWS_AS(savings(0.0, 1.0), std::invalid_argument);
}
