// Command-line front end for the machine+crowd detection pipeline
// simulator: generate synthetic datasets, match raw detections, and emit
// cost-accuracy curves, sweep surfaces, and budget comparisons as CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crowdpipe/csv.hpp"
#include "crowdpipe/dataset_io.hpp"
#include "crowdpipe/matching.hpp"
#include "crowdpipe/optimizer.hpp"
#include "crowdpipe/synth.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInputData = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failure: " + path);
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1 || hi < lo) {
    throw crowdpipe::ValidationError("invalid grid specification");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return grid;
}

crowdpipe::Ordering parse_ordering(const std::string& name) {
  using crowdpipe::Ordering;
  if (name == "random") return Ordering::Random;
  if (name == "confidence-asc") return Ordering::ConfidenceAscending;
  if (name == "confidence-desc") return Ordering::ConfidenceDescending;
  if (name == "oracle-fp-first") return Ordering::OracleFpFirst;
  throw crowdpipe::ValidationError("unknown ordering: " + name);
}

struct Options {
  std::string input, output, config_path;
  std::string out_surface, out_envelope;
  std::string baseline_path, improved_path, curve_path;
  std::string ordering = "random";
  std::string worker = "perfect";
  std::string mode;  // empty = exact when it applies, else a seeded run
  double iou_threshold = 0.5;
  double threshold = 0.0;
  double t_min = 0.0, t_max = 1.0;
  int t_steps = 21;
  double budget_max = 0.0;
  int budget_steps = 51;
  double cost = 1.0;
  double p_miss_fp = 0.0, p_drop_tp = 0.0;
  double target_f = 0.9;
  std::uint64_t seed = 42;
  int reps = 100;
  int jobs = 0;  // 0 = all cores, 1 = serial
};

crowdpipe::WorkerModel make_worker(const Options& opt) {
  if (opt.worker == "perfect") return crowdpipe::WorkerModel::perfect();
  if (opt.worker == "noisy") {
    return crowdpipe::WorkerModel::noisy(opt.p_miss_fp, opt.p_drop_tp);
  }
  throw crowdpipe::ValidationError("unknown worker model: " + opt.worker);
}

crowdpipe::SimOptions make_sim_options(const Options& opt) {
  crowdpipe::SimOptions sim;
  if (opt.mode.empty()) {
    const bool exact_applies =
        parse_ordering(opt.ordering) == crowdpipe::Ordering::Random &&
        opt.worker == "perfect";
    sim.mode = exact_applies ? crowdpipe::SimOptions::Mode::ExactRandom
                             : crowdpipe::SimOptions::Mode::Seeded;
    sim.seed = opt.seed;
    sim.reps = exact_applies ? 1 : opt.reps;
    return sim;
  }
  if (opt.mode == "exact") {
    sim.mode = crowdpipe::SimOptions::Mode::ExactRandom;
  } else if (opt.mode == "mc") {
    sim.mode = crowdpipe::SimOptions::Mode::Seeded;
  } else {
    throw crowdpipe::ValidationError("unknown mode: " + opt.mode);
  }
  sim.seed = opt.seed;
  sim.reps = opt.reps;
  return sim;
}

void run_gen(const Options& opt) {
  auto in = open_in(opt.config_path);
  const auto cfg = crowdpipe::load_synth_config(in);
  const auto ds = crowdpipe::generate(cfg, opt.seed);
  auto out = open_out(opt.output);
  crowdpipe::save_labeled(ds, out);
  finish_out(out, opt.output);
}

void run_match(const Options& opt) {
  auto in = open_in(opt.input);
  const auto raw = crowdpipe::load_raw(in);
  const auto ds = crowdpipe::match_detections(
      raw.detections, raw.ground_truth, raw.n_images, {opt.iou_threshold});
  auto out = open_out(opt.output);
  crowdpipe::save_labeled(ds, out);
  finish_out(out, opt.output);
}

void run_curve(const Options& opt) {
  auto in = open_in(opt.input);
  const auto ds = crowdpipe::load_labeled(in);
  const auto budgets = linspace(0.0, opt.budget_max, opt.budget_steps);
  const auto curve = crowdpipe::cost_accuracy_curve(
      ds, {opt.threshold}, parse_ordering(opt.ordering), make_worker(opt),
      budgets, opt.cost, make_sim_options(opt));
  auto out = open_out(opt.output);
  crowdpipe::write_curve_csv(curve, out);
  finish_out(out, opt.output);
}

void run_sweep(const Options& opt) {
  auto in = open_in(opt.input);
  const auto ds = crowdpipe::load_labeled(in);
  const auto thresholds = linspace(opt.t_min, opt.t_max, opt.t_steps);
  const auto budgets = linspace(0.0, opt.budget_max, opt.budget_steps);

  const auto ordering = parse_ordering(opt.ordering);
  const auto worker = make_worker(opt);
  crowdpipe::SimOptions sim = make_sim_options(opt);
  // Exact expectation only exists for the random baseline with perfect
  // workers; anything else gets a single seeded run per cell.
  if (sim.mode == crowdpipe::SimOptions::Mode::Seeded) sim.reps = 1;

  const auto surface = crowdpipe::sweep(ds, thresholds, budgets, ordering,
                                        worker, opt.cost, sim, opt.jobs != 1);
  auto sout = open_out(opt.out_surface);
  crowdpipe::write_surface_csv(surface, sout);
  finish_out(sout, opt.out_surface);
  auto eout = open_out(opt.out_envelope);
  crowdpipe::write_envelope_csv(surface, eout);
  finish_out(eout, opt.out_envelope);
}

std::optional<double> reach_from_file(const std::string& path, double target) {
  auto in = open_in(path);
  return crowdpipe::budget_to_reach(crowdpipe::read_curve_csv(in), target);
}

void run_reach(const Options& opt) {
  const auto budget = reach_from_file(opt.curve_path, opt.target_f);
  if (budget) {
    std::printf("%.9g\n", *budget);
  } else {
    std::printf("unreached\n");
  }
}

void run_savings(const Options& opt) {
  const auto baseline = reach_from_file(opt.baseline_path, opt.target_f);
  const auto improved = reach_from_file(opt.improved_path, opt.target_f);
  if (!baseline || !improved) {
    std::printf("unreached\n");
    return;
  }
  std::printf("%.9g\n", crowdpipe::savings(*baseline, *improved));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"machine+crowd detection pipeline simulator and optimizer"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen", "generate a synthetic labeled dataset");
  gen->add_option("--config", opt.config_path, "synthesis config (JSON)")
      ->required();
  gen->add_option("--seed", opt.seed, "RNG seed");
  gen->add_option("--out", opt.output, "labeled dataset output path")->required();

  auto* match = app.add_subcommand("match", "label raw detections against ground truth");
  match->add_option("--input", opt.input, "raw-detection document")->required();
  match->add_option("--iou", opt.iou_threshold, "IoU match threshold");
  match->add_option("--out", opt.output, "labeled dataset output path")->required();

  auto* curve = app.add_subcommand("curve", "cost-accuracy curve at one threshold");
  curve->add_option("--input", opt.input, "labeled dataset")->required();
  curve->add_option("--threshold", opt.threshold, "detection threshold")->required();
  curve->add_option("--ordering", opt.ordering,
                    "random|confidence-asc|confidence-desc|oracle-fp-first");
  curve->add_option("--worker", opt.worker, "perfect|noisy");
  curve->add_option("--p-miss-fp", opt.p_miss_fp, "noisy: P(keep a false detection)");
  curve->add_option("--p-drop-tp", opt.p_drop_tp, "noisy: P(remove a true detection)");
  curve->add_option("--budget-max", opt.budget_max, "largest budget (time per image)")
      ->required();
  curve->add_option("--budget-steps", opt.budget_steps, "number of budget grid points");
  curve->add_option("--cost", opt.cost, "time per verification task");
  curve->add_option("--mode", opt.mode, "exact|mc");
  curve->add_option("--reps", opt.reps, "MC repetitions");
  curve->add_option("--seed", opt.seed, "RNG seed");
  curve->add_option("--out", opt.output, "curve CSV output path")->required();

  auto* sweep = app.add_subcommand("sweep", "threshold x budget F-measure surface");
  sweep->add_option("--input", opt.input, "labeled dataset")->required();
  sweep->add_option("--t-min", opt.t_min, "lowest threshold")->required();
  sweep->add_option("--t-max", opt.t_max, "highest threshold")->required();
  sweep->add_option("--t-steps", opt.t_steps, "number of threshold grid points");
  sweep->add_option("--budget-max", opt.budget_max, "largest budget")->required();
  sweep->add_option("--budget-steps", opt.budget_steps, "number of budget grid points");
  sweep->add_option("--ordering", opt.ordering,
                    "random|confidence-asc|confidence-desc|oracle-fp-first");
  sweep->add_option("--worker", opt.worker, "perfect|noisy");
  sweep->add_option("--p-miss-fp", opt.p_miss_fp, "noisy: P(keep a false detection)");
  sweep->add_option("--p-drop-tp", opt.p_drop_tp, "noisy: P(remove a true detection)");
  sweep->add_option("--cost", opt.cost, "time per verification task");
  sweep->add_option("--seed", opt.seed, "RNG seed");
  sweep->add_option("--jobs", opt.jobs, "worker threads (0 = all cores, 1 = serial)");
  sweep->add_option("--out-surface", opt.out_surface, "surface CSV path")->required();
  sweep->add_option("--out-envelope", opt.out_envelope, "envelope CSV path")->required();

  auto* reach = app.add_subcommand("reach", "smallest budget reaching a target F");
  reach->add_option("--curve", opt.curve_path, "curve CSV")->required();
  reach->add_option("--target-f", opt.target_f, "target F-measure")->required();

  auto* savings = app.add_subcommand("savings", "budget savings at a target F");
  savings->add_option("--baseline", opt.baseline_path, "baseline curve CSV")->required();
  savings->add_option("--improved", opt.improved_path, "improved curve CSV")->required();
  savings->add_option("--target-f", opt.target_f, "target F-measure")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) run_gen(opt);
    if (match->parsed()) run_match(opt);
    if (curve->parsed()) run_curve(opt);
    if (sweep->parsed()) run_sweep(opt);
    if (reach->parsed()) run_reach(opt);
    if (savings->parsed()) run_savings(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const crowdpipe::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputData;
  }
  return 0;
}
