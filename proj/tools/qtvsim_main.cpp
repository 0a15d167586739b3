// qtvsim: deterministic masked-Hamiltonian evolution, quantum state
// metrics, and the kill-web scenario from the command line.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtvsim/errors.hpp"
#include "qtvsim/evolution.hpp"
#include "qtvsim/io.hpp"
#include "qtvsim/killweb.hpp"
#include "qtvsim/linalg.hpp"
#include "qtvsim/measurement.hpp"
#include "qtvsim/qig.hpp"
#include "qtvsim/quantum_state.hpp"
#include "qtvsim/types.hpp"

namespace fs = std::filesystem;
using namespace qtvsim;

namespace {

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory '" + dir + "': " + ec.message());
  }
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::string join_list(const RealVector& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out += ';';
    out += format_number(v(i));
  }
  return out;
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  std::string input;
  std::string imag;
  std::string out_dir = ".";
};

void cmd_metrics(const MetricsArgs& args) {
  ComplexMatrix rho = args.imag.empty()
                          ? read_complex_matrix_csv(args.input)
                          : read_complex_matrix_pair(args.input, args.imag);
  double herm = hermiticity_residual(rho);
  double l1 = coherence(rho);
  DensityMatrix dm(rho);
  double p = purity(dm);
  double s = entanglement_entropy(dm);
  double trace = rho.trace().real();

  std::cout << "purity = " << format_number(p) << '\n'
            << "qee = " << format_number(s) << '\n'
            << "coherence = " << format_number(l1) << '\n'
            << "trace = " << format_number(trace) << '\n'
            << "hermiticity_residual = " << format_number(herm) << '\n';

  ensure_dir(args.out_dir);
  std::string path = join_path(args.out_dir, "metrics.csv");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "purity,qee,coherence,trace,hermiticity_residual\n"
      << format_number(p) << ',' << format_number(s) << ',' << format_number(l1)
      << ',' << format_number(trace) << ',' << format_number(herm) << '\n';
}

// ------------------------------------------------------------------ score

struct ScoreArgs {
  double alpha = 0.0;
  double lambda1 = 0.0;
  double e0 = 0.0;
  double e1 = 1.0;
};

void cmd_score(const ScoreArgs& args) {
  AlignmentResult best = best_alignment(args.alpha, args.lambda1, args.e0, args.e1);
  double classical = classical_expectation(rank1_operator(args.alpha), args.lambda1);
  std::cout << "t_star = " << format_number(best.t_star) << '\n'
            << "quantum = " << format_number(best.qtv_max) << '\n'
            << "classical = " << format_number(classical) << '\n'
            << "gap = " << format_number(best.qtv_max - classical) << '\n';
}

// ----------------------------------------------------------------- evolve

void write_run_files(const std::string& dir, const EvolutionResult& result) {
  ensure_dir(dir);
  write_trace_csv(join_path(dir, "trace.csv"), result.records);
  write_real_matrix_csv(join_path(dir, "H_best.csv"), result.best.h);
  write_real_matrix_csv(join_path(dir, "H_final.csv"), result.final.h);
  for (const Snapshot& snap : result.snapshots) {
    write_real_matrix_csv(join_path(dir, "H_" + std::to_string(snap.step) + ".csv"),
                          snap.h);
  }
}

struct EvolveArgs {
  std::string config_path;
  std::string mask_path;  // overrides the config key
  std::string out_dir;    // overrides the config key
};

void cmd_evolve(const EvolveArgs& args) {
  ConfigDoc doc = args.config_path.empty() ? ConfigDoc()
                                           : ConfigDoc::parse_file(args.config_path);
  doc.require_known_keys({"n", "d", "eta", "lambda_decay", "steps", "seed",
                          "snapshot_stride", "mask_path", "out_dir"});

  EvolutionConfig cfg;
  if (doc.has("d")) cfg.d = doc.get_int("d");
  if (doc.has("eta")) cfg.eta = doc.get_double("eta");
  if (doc.has("lambda_decay")) cfg.lambda_decay = doc.get_double("lambda_decay");
  if (doc.has("steps")) cfg.steps = doc.get_int("steps");
  if (doc.has("seed")) cfg.seed = doc.get_uint64("seed");
  if (doc.has("snapshot_stride")) cfg.snapshot_stride = doc.get_int("snapshot_stride");

  std::string mask_path = args.mask_path;
  if (mask_path.empty() && doc.has("mask_path")) mask_path = doc.get_string("mask_path");
  if (mask_path.empty()) {
    throw InvalidConfigError("evolve needs a mask: pass --mask or the mask_path key");
  }
  std::string out_dir = args.out_dir;
  if (out_dir.empty() && doc.has("out_dir")) out_dir = doc.get_string("out_dir");
  if (out_dir.empty()) out_dir = ".";

  RealMatrix mask = read_real_matrix_csv(mask_path);
  cfg.n = static_cast<int>(mask.rows());
  if (doc.has("n") && doc.get_int("n") != cfg.n) {
    throw InvalidConfigError("config says n = " + std::to_string(doc.get_int("n")) +
                             " but the mask is " + std::to_string(mask.rows()) + "x" +
                             std::to_string(mask.cols()));
  }
  cfg.state_source = StateSource::random_bipartite;

  StateProvider provider =
      random_bipartite_provider(cfg.n, cfg.d, RandomStream(cfg.seed, 0));
  EvolutionResult result = evolve(cfg, mask, provider);
  write_run_files(out_dir, result);

  const TraceRecord& peak = result.records[result.best.step];
  std::cout << "peak_two_norm = " << format_number(peak.two_norm) << '\n'
            << "peak_step = " << result.best.step << '\n'
            << "final_two_norm = " << format_number(result.records.back().two_norm)
            << '\n'
            << "final_step = " << result.final.step << '\n'
            << "out_dir = " << out_dir << '\n';
}

// ---------------------------------------------------------------- killweb

struct KillwebArgs {
  std::string config_path;
  std::string out_dir;
  int seeds = 1;
  bool optimize = false;
};

void cmd_killweb(const KillwebArgs& args) {
  ConfigDoc doc = args.config_path.empty() ? ConfigDoc()
                                           : ConfigDoc::parse_file(args.config_path);
  doc.require_known_keys({"n", "d", "eta", "lambda_decay", "steps", "seed",
                          "snapshot_stride", "weights", "energies", "grid_points",
                          "restarts", "max_rounds", "tolerance", "energy_min",
                          "energy_max", "out_dir"});

  EvolutionConfig cfg;
  cfg.n = 10;
  if (doc.has("n") && doc.get_int("n") != 10) {
    throw InvalidConfigError("the kill-web has 10 nodes; n must be 10");
  }
  if (doc.has("d")) cfg.d = doc.get_int("d");
  if (doc.has("eta")) cfg.eta = doc.get_double("eta");
  if (doc.has("lambda_decay")) cfg.lambda_decay = doc.get_double("lambda_decay");
  if (doc.has("steps")) cfg.steps = doc.get_int("steps");
  if (doc.has("seed")) cfg.seed = doc.get_uint64("seed");
  if (doc.has("snapshot_stride")) cfg.snapshot_stride = doc.get_int("snapshot_stride");

  bool blue = doc.has("weights") || doc.has("energies") || args.optimize;
  RealVector weights = RealVector::Constant(4, 0.25);
  RealVector energies(4);
  energies << 0.0, 1.0, 2.0, 3.0;
  if (doc.has("weights")) {
    std::vector<double> w = doc.get_double_list("weights");
    if (w.size() != 4) {
      throw InvalidConfigError("weights needs exactly 4 entries, got " +
                               std::to_string(w.size()));
    }
    for (int i = 0; i < 4; ++i) weights(i) = w[i];
  }
  if (doc.has("energies")) {
    std::vector<double> e = doc.get_double_list("energies");
    if (e.size() != 4) {
      throw InvalidConfigError("energies needs exactly 4 entries, got " +
                               std::to_string(e.size()));
    }
    for (int i = 0; i < 4; ++i) energies(i) = e[i];
  }

  SearchConfig search;
  if (doc.has("grid_points")) search.grid_points = doc.get_int("grid_points");
  if (doc.has("restarts")) search.restarts = doc.get_int("restarts");
  if (doc.has("max_rounds")) search.max_rounds = doc.get_int("max_rounds");
  if (doc.has("tolerance")) search.tolerance = doc.get_double("tolerance");
  if (doc.has("energy_min")) search.energy_min = doc.get_double("energy_min");
  if (doc.has("energy_max")) search.energy_max = doc.get_double("energy_max");

  std::string out_dir = args.out_dir;
  if (out_dir.empty() && doc.has("out_dir")) out_dir = doc.get_string("out_dir");
  if (out_dir.empty()) out_dir = ".";
  if (args.seeds < 1) {
    throw InvalidConfigError("--seeds must be >= 1, got " + std::to_string(args.seeds));
  }

  ensure_dir(out_dir);
  std::string summary_path = join_path(out_dir, "summary.csv");
  std::ofstream summary(summary_path, std::ios::binary);
  if (!summary) throw IoError("cannot open '" + summary_path + "' for writing");
  summary << "seed,peak_two_norm,peak_step,final_two_norm,best_weights,best_energies\n";

  for (int i = 0; i < args.seeds; ++i) {
    EvolutionConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
    std::string weights_cell;
    std::string energies_cell;
    ScenarioResult scenario = [&]() {
      if (args.optimize) {
        SearchConfig sc = search;
        sc.seed = run_cfg.seed;
        SearchResult found =
            optimize_superposition(killweb_peak_objective(run_cfg), 4, 4, sc);
        weights_cell = join_list(found.weights);
        energies_cell = join_list(found.energies);
        return run_killweb(run_cfg, found.weights, found.energies);
      }
      if (blue) {
        weights_cell = join_list(weights);
        energies_cell = join_list(energies);
        return run_killweb(run_cfg, weights, energies);
      }
      run_cfg.state_source = StateSource::random_bipartite;
      return run_killweb(run_cfg);
    }();

    std::string run_dir =
        args.seeds > 1
            ? join_path(out_dir, "seed_" + std::to_string(run_cfg.seed))
            : out_dir;
    write_run_files(run_dir, scenario.evolution);
    summary << run_cfg.seed << ',' << format_number(scenario.peak_two_norm) << ','
            << scenario.peak_step << ',' << format_number(scenario.final_two_norm)
            << ',' << weights_cell << ',' << energies_cell << '\n';
    std::cout << "seed " << run_cfg.seed
              << ": peak_two_norm = " << format_number(scenario.peak_two_norm)
              << " at step " << scenario.peak_step
              << ", final_two_norm = " << format_number(scenario.final_two_norm)
              << '\n';
  }
  if (!summary) throw IoError("write to '" + summary_path + "' failed");
  std::cout << "out_dir = " << out_dir << '\n';
}

// ------------------------------------------------------------------- page

struct PageArgs {
  int n = 2;
  int d = 2;
  int samples = 10000;
  std::uint64_t seed = 0;
};

void cmd_page(const PageArgs& args) {
  if (args.samples < 1) {
    throw InvalidConfigError("--samples must be >= 1, got " +
                             std::to_string(args.samples));
  }
  RandomStream stream(args.seed, 0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int s = 0; s < args.samples; ++s) {
    ComplexVector joint = bipartite_state(args.n, args.d, stream);
    DensityMatrix reduced(partial_trace_A(joint, args.n, args.d));
    double entropy = entanglement_entropy(reduced);
    sum += entropy;
    sum_sq += entropy * entropy;
  }
  double mean = sum / args.samples;
  double se = 0.0;
  if (args.samples > 1) {
    double variance = (sum_sq - args.samples * mean * mean) / (args.samples - 1);
    se = std::sqrt(std::max(0.0, variance) / args.samples);
  }
  std::cout << "samples = " << args.samples << '\n'
            << "mean = " << format_number(mean) << '\n'
            << "standard_error = " << format_number(se) << '\n';
}

// ------------------------------------------------------------------ torus

struct TorusArgs {
  double lambda0 = 0.5;
  double lambda1 = 0.5;
  double e0 = 1.0;
  double e1 = 1.0;
  int steps = 200;
  double t_max = 2.0 * kPi;
  std::string out_dir = ".";
};

void cmd_torus(const TorusArgs& args) {
  if (args.steps < 1) {
    throw InvalidConfigError("--steps must be >= 1, got " + std::to_string(args.steps));
  }
  if (!(args.t_max >= 0.0)) {
    throw InvalidConfigError("--t-max must be >= 0");
  }
  ensure_dir(args.out_dir);
  std::string path = join_path(args.out_dir, "torus.csv");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "t,X,Y,Z\n";
  for (int i = 0; i < args.steps; ++i) {
    double t = args.steps == 1
                   ? 0.0
                   : args.t_max * static_cast<double>(i) / (args.steps - 1);
    TorusPoint p = torus_point(args.lambda0, args.lambda1, args.e0, args.e1, t);
    out << format_number(t) << ',' << format_number(p.x) << ',' << format_number(p.y)
        << ',' << format_number(p.z) << '\n';
  }
  if (!out) throw IoError("write to '" + path + "' failed");
  std::cout << "rows = " << args.steps << '\n'
            << "minor_radius = "
            << format_number(2.0 * std::sqrt(args.lambda0 * args.lambda1)) << '\n'
            << "out = " << path << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic quantum-inspired Hamiltonian evolution toolkit"};
  app.require_subcommand(1);

  MetricsArgs metrics_args;
  CLI::App* metrics = app.add_subcommand(
      "metrics", "density matrix metrics from a CSV matrix");
  metrics->add_option("--input", metrics_args.input,
                      "CSV of the matrix; cells may be complex like 1.5+0.5i")
      ->required();
  metrics->add_option("--imag", metrics_args.imag,
                      "separate CSV with the imaginary part (then --input is the "
                      "real part)");
  metrics->add_option("--out", metrics_args.out_dir, "directory for metrics.csv");

  ScoreArgs score_args;
  CLI::App* score = app.add_subcommand(
      "score", "closed-form alignment score of a two-component state");
  score->add_option("--alpha", score_args.alpha, "measurement angle in [0, pi/2]")
      ->required();
  score->add_option("--lambda1", score_args.lambda1, "weight of the second component")
      ->required();
  score->add_option("--e0", score_args.e0, "energy of the first component");
  score->add_option("--e1", score_args.e1, "energy of the second component");

  EvolveArgs evolve_args;
  CLI::App* evolve_cmd = app.add_subcommand(
      "evolve", "masked Hamiltonian evolution driven by random states");
  evolve_cmd->add_option("--config", evolve_args.config_path, "key = value config file");
  evolve_cmd->add_option("--mask", evolve_args.mask_path,
                         "CSV binary mask (overrides mask_path)");
  evolve_cmd->add_option("--out", evolve_args.out_dir,
                         "output directory (overrides out_dir)");

  KillwebArgs killweb_args;
  CLI::App* killweb_cmd =
      app.add_subcommand("killweb", "the 10-node kill-web scenario");
  killweb_cmd->add_option("--config", killweb_args.config_path,
                          "key = value config file");
  killweb_cmd->add_option("--out", killweb_args.out_dir,
                          "output directory (overrides out_dir)");
  killweb_cmd->add_option("--seeds", killweb_args.seeds,
                          "run this many consecutive seeds");
  killweb_cmd->add_flag("--optimize", killweb_args.optimize,
                        "search category weights and energies for the largest peak");

  PageArgs page_args;
  CLI::App* page = app.add_subcommand(
      "page", "mean entanglement entropy of random bipartite states");
  page->add_option("--n", page_args.n, "kept subsystem dimension")->required();
  page->add_option("--d", page_args.d, "traced subsystem dimension")->required();
  page->add_option("--samples", page_args.samples, "number of samples");
  page->add_option("--seed", page_args.seed, "stream seed");

  TorusArgs torus_args;
  CLI::App* torus = app.add_subcommand(
      "torus", "torus embedding of a two-component phase flow");
  torus->add_option("--lambda0", torus_args.lambda0, "first weight")->required();
  torus->add_option("--lambda1", torus_args.lambda1, "second weight")->required();
  torus->add_option("--e0", torus_args.e0, "first energy");
  torus->add_option("--e1", torus_args.e1, "second energy");
  torus->add_option("--steps", torus_args.steps, "number of sample points");
  torus->add_option("--t-max", torus_args.t_max, "end of the sampled time range");
  torus->add_option("--out", torus_args.out_dir, "directory for torus.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags are a parse problem
  }

  try {
    if (metrics->parsed()) cmd_metrics(metrics_args);
    if (score->parsed()) cmd_score(score_args);
    if (evolve_cmd->parsed()) cmd_evolve(evolve_args);
    if (killweb_cmd->parsed()) cmd_killweb(killweb_args);
    if (page->parsed()) cmd_page(page_args);
    if (torus->parsed()) cmd_torus(torus_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error (line " << e.line() << ", column " << e.column()
              << "): " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
