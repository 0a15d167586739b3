#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <fstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "qtvsim/io.hpp"

using namespace qtvsim;
using qtvsim::testing::CommandResult;
using qtvsim::testing::make_temp_dir;
using qtvsim::testing::parse_output_value;
using qtvsim::testing::read_text;

namespace {

const std::string kCli = QTVSIM_CLI_PATH;

CommandResult cli(const std::string& args, const std::string& scratch) {
  return qtvsim::testing::run_cli(kCli, args, scratch);
}

std::string write_file(const std::string& dir, const std::string& name,
                       const std::string& text) {
  std::string path = dir + "/" + name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

}  // namespace

TEST_CASE("help succeeds and missing subcommands are parse failures") {
  std::string dir = make_temp_dir("cli_help");
  CHECK(cli("--help", dir).exit_code == 0);
  CHECK(cli("", dir).exit_code == 2);
  CHECK(cli("metrics --no-such-flag", dir).exit_code == 2);
  CHECK(cli("nonsense", dir).exit_code == 2);
}

TEST_CASE("metrics reports the maximally mixed state") {
  std::string dir = make_temp_dir("cli_metrics");
  std::string input = write_file(dir, "rho.csv", "0.5,0\n0,0.5\n");
  CommandResult r = cli("metrics --input " + input + " --out " + dir, dir);
  REQUIRE(r.exit_code == 0);
  CHECK(parse_output_value(r.output, "purity") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(parse_output_value(r.output, "qee") ==
        doctest::Approx(std::log(2.0)).epsilon(1e-11));
  CHECK(parse_output_value(r.output, "coherence") == 0.0);
  CHECK(parse_output_value(r.output, "trace") == 1.0);
  CHECK(parse_output_value(r.output, "hermiticity_residual") == 0.0);
  std::string csv = read_text(dir + "/metrics.csv");
  CHECK(csv.rfind("purity,qee,coherence,trace,hermiticity_residual\n", 0) == 0);
  CHECK(csv.find("0.69314718056") != std::string::npos);
}

TEST_CASE("metrics accepts a real imag pair with complex coherence") {
  std::string dir = make_temp_dir("cli_metrics_pair");
  std::string re = write_file(dir, "re.csv", "0.5,0\n0,0.5\n");
  std::string im = write_file(dir, "im.csv", "0,-0.5\n0.5,0\n");
  CommandResult r =
      cli("metrics --input " + re + " --imag " + im + " --out " + dir, dir);
  REQUIRE(r.exit_code == 0);
  CHECK(parse_output_value(r.output, "purity") == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(parse_output_value(r.output, "qee") == doctest::Approx(0.0).epsilon(1e-11));
  CHECK(parse_output_value(r.output, "coherence") ==
        doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("metrics reproduces the uneven two-level entropy") {
  std::string dir = make_temp_dir("cli_metrics_uneven");
  std::string input = write_file(dir, "rho.csv", "0.25,0\n0,0.75\n");
  CommandResult r = cli("metrics --input " + input + " --out " + dir, dir);
  REQUIRE(r.exit_code == 0);
  CHECK(parse_output_value(r.output, "qee") ==
        doctest::Approx(0.5623351446188083).epsilon(1e-11));
  CHECK(parse_output_value(r.output, "purity") ==
        doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("metrics distinguishes parse failures from contract failures") {
  std::string dir = make_temp_dir("cli_metrics_err");
  std::string bad = write_file(dir, "bad.csv", "0.5,x\n0,0.5\n");
  CHECK(cli("metrics --input " + bad + " --out " + dir, dir).exit_code == 2);
  CHECK(cli("metrics --input " + dir + "/absent.csv --out " + dir, dir).exit_code ==
        2);
  std::string off = write_file(dir, "off.csv", "0.6,0\n0,0.6\n");
  CHECK(cli("metrics --input " + off + " --out " + dir, dir).exit_code == 3);
}

TEST_CASE("score prints the alignment numbers") {
  std::string dir = make_temp_dir("cli_score");
  CommandResult r =
      cli("score --alpha 0.7853981633974483 --lambda1 0.25", dir);
  REQUIRE(r.exit_code == 0);
  CHECK(parse_output_value(r.output, "t_star") ==
        doctest::Approx(2.0 * kPi).epsilon(1e-11));
  CHECK(parse_output_value(r.output, "quantum") ==
        doctest::Approx(0.9330127018922193).epsilon(1e-11));
  CHECK(parse_output_value(r.output, "classical") ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(parse_output_value(r.output, "gap") ==
        doctest::Approx(0.4330127018922193).epsilon(1e-10));
  CHECK(cli("score --alpha 0.5 --lambda1 1.5", dir).exit_code == 3);
  CHECK(cli("score --alpha 0.5", dir).exit_code == 2);  // missing required flag
}

TEST_CASE("evolve runs a config against a mask and is reproducible") {
  std::string dir = make_temp_dir("cli_evolve");
  std::string mask = write_file(dir, "mask.csv", "1,0,0\n1,1,0\n0,1,1\n");
  std::string cfg = write_file(dir, "run.cfg",
                               "n = 3\nsteps = 40\nseed = 4\nsnapshot_stride = 10\n");
  std::string out_a = dir + "/a";
  std::string out_b = dir + "/b";
  CommandResult a =
      cli("evolve --config " + cfg + " --mask " + mask + " --out " + out_a, dir);
  REQUIRE(a.exit_code == 0);
  CommandResult b =
      cli("evolve --config " + cfg + " --mask " + mask + " --out " + out_b, dir);
  REQUIRE(b.exit_code == 0);

  CHECK(read_text(out_a + "/trace.csv") == read_text(out_b + "/trace.csv"));
  CHECK(read_text(out_a + "/H_final.csv") == read_text(out_b + "/H_final.csv"));
  CHECK(read_text(out_a + "/H_best.csv") == read_text(out_b + "/H_best.csv"));
  for (int step : {0, 10, 20, 30}) {
    CHECK(file_exists(out_a + "/H_" + std::to_string(step) + ".csv"));
  }
  CHECK(parse_output_value(a.output, "peak_two_norm") ==
        parse_output_value(b.output, "peak_two_norm"));
  RealMatrix trace = read_real_matrix_csv(out_a + "/trace.csv", 1);
  CHECK(trace.rows() == 40);
  CHECK(trace.cols() == 9);
}

TEST_CASE("evolve with no update steps writes the uniform start") {
  std::string dir = make_temp_dir("cli_evolve0");
  std::string mask = write_file(dir, "mask.csv", "1,0\n1,1\n");
  std::string cfg = write_file(dir, "run.cfg", "steps = 0\n");
  CommandResult r =
      cli("evolve --config " + cfg + " --mask " + mask + " --out " + dir + "/out",
          dir);
  REQUIRE(r.exit_code == 0);
  RealMatrix trace = read_real_matrix_csv(dir + "/out/trace.csv", 1);
  CHECK(trace.rows() == 1);
  RealMatrix h = read_real_matrix_csv(dir + "/out/H_final.csv");
  CHECK(h(0, 0) == 0.5);  // mask / trace(mask)
  CHECK(h(1, 0) == 0.5);
  CHECK(h(0, 1) == 0.0);
}

TEST_CASE("evolve follows the trace recurrence at mismatched rates") {
  // unit mask diagonal makes the reinforcement add exactly eta per step,
  // so trace(t+1) = (1 - lambda) trace(t) + eta
  std::string dir = make_temp_dir("cli_evolve_decay");
  std::string mask = write_file(dir, "mask.csv", "1,0\n1,1\n");
  std::string cfg = write_file(
      dir, "run.cfg", "eta = 0.25\nlambda_decay = 0.5\nsteps = 3\n");
  CommandResult r =
      cli("evolve --config " + cfg + " --mask " + mask + " --out " + dir + "/out",
          dir);
  REQUIRE(r.exit_code == 0);
  RealMatrix trace = read_real_matrix_csv(dir + "/out/trace.csv", 1);
  REQUIRE(trace.rows() == 3);
  CHECK(trace(0, 8) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(trace(1, 8) == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(trace(2, 8) == doctest::Approx(0.5625).epsilon(1e-12));
}

TEST_CASE("evolve surfaces config problems with the right exit codes") {
  std::string dir = make_temp_dir("cli_evolve_err");
  std::string mask = write_file(dir, "mask.csv", "1,0\n1,1\n");
  std::string no_mask_cfg = write_file(dir, "a.cfg", "steps = 5\n");
  CHECK(cli("evolve --config " + no_mask_cfg, dir).exit_code == 3);
  std::string missing_file_cfg =
      write_file(dir, "b.cfg", "mask_path = " + dir + "/absent.csv\n");
  CHECK(cli("evolve --config " + missing_file_cfg, dir).exit_code == 2);
  std::string unknown_key_cfg = write_file(dir, "c.cfg", "velocity = 3\n");
  CHECK(cli("evolve --config " + unknown_key_cfg + " --mask " + mask, dir)
            .exit_code == 3);
  std::string wrong_n_cfg = write_file(dir, "d.cfg", "n = 5\n");
  CHECK(cli("evolve --config " + wrong_n_cfg + " --mask " + mask + " --out " + dir,
            dir)
            .exit_code == 3);
}

TEST_CASE("killweb sweeps seeds into per seed directories with a summary") {
  std::string dir = make_temp_dir("cli_killweb");
  std::string cfg = write_file(dir, "kw.cfg", "steps = 6\nseed = 1\n");
  CommandResult r =
      cli("killweb --config " + cfg + " --out " + dir + "/out --seeds 3", dir);
  REQUIRE(r.exit_code == 0);
  for (int seed : {1, 2, 3}) {
    CHECK(file_exists(dir + "/out/seed_" + std::to_string(seed) + "/trace.csv"));
    CHECK(r.output.find("seed " + std::to_string(seed) + ":") != std::string::npos);
  }
  std::string summary = read_text(dir + "/out/summary.csv");
  CHECK(summary.rfind("seed,peak_two_norm,peak_step,final_two_norm,best_weights,"
                      "best_energies\n", 0) == 0);
  // random runs leave the drive cells empty, so count lines instead of parsing
  size_t lines = 0;
  for (char c : summary) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 4);  // header plus one row per seed
  CHECK(summary.find("\n1,") != std::string::npos);
  CHECK(summary.find(",,") != std::string::npos);  // empty drive cells
}

TEST_CASE("killweb blue runs record the drive in the summary") {
  std::string dir = make_temp_dir("cli_killweb_blue");
  std::string cfg = write_file(
      dir, "kw.cfg",
      "steps = 6\nweights = 0.25, 0.25, 0.25, 0.25\nenergies = 0, 1, 2, 3\n");
  CommandResult r = cli("killweb --config " + cfg + " --out " + dir + "/out", dir);
  REQUIRE(r.exit_code == 0);
  std::string summary = read_text(dir + "/out/summary.csv");
  CHECK(summary.find("0.25;0.25;0.25;0.25") != std::string::npos);
  CHECK(summary.find("0;1;2;3") != std::string::npos);
  CHECK(file_exists(dir + "/out/trace.csv"));  // single seed stays flat

  std::string bad = write_file(dir, "bad.cfg", "n = 8\n");
  CHECK(cli("killweb --config " + bad + " --out " + dir + "/out2", dir).exit_code ==
        3);
}

TEST_CASE("killweb reruns are byte identical") {
  std::string dir = make_temp_dir("cli_killweb_det");
  std::string cfg = write_file(dir, "kw.cfg", "steps = 8\nseed = 9\n");
  REQUIRE(cli("killweb --config " + cfg + " --out " + dir + "/a", dir).exit_code == 0);
  REQUIRE(cli("killweb --config " + cfg + " --out " + dir + "/b", dir).exit_code == 0);
  CHECK(read_text(dir + "/a/trace.csv") == read_text(dir + "/b/trace.csv"));
  CHECK(read_text(dir + "/a/summary.csv") == read_text(dir + "/b/summary.csv"));
  CHECK(read_text(dir + "/a/H_final.csv") == read_text(dir + "/b/H_final.csv"));
}

TEST_CASE("page reports zero entropy when nothing is traced out") {
  std::string dir = make_temp_dir("cli_page");
  CommandResult r = cli("page --n 2 --d 1 --samples 50", dir);
  REQUIRE(r.exit_code == 0);
  CHECK(parse_output_value(r.output, "samples") == 50.0);
  // pure states enter the entropy with eigenvalues 1 and 0 up to roundoff
  CHECK(std::abs(parse_output_value(r.output, "mean")) < 1e-12);
  CHECK(std::abs(parse_output_value(r.output, "standard_error")) < 1e-12);
  CHECK(cli("page --n 2 --d 2 --samples 0", dir).exit_code == 3);
}

TEST_CASE("page approaches the two qubit average entropy") {
  std::string dir = make_temp_dir("cli_page_mc");
  CommandResult r = cli("page --n 2 --d 2 --samples 2000 --seed 7", dir);
  REQUIRE(r.exit_code == 0);
  double mean = parse_output_value(r.output, "mean");
  CHECK(mean == doctest::Approx(1.0 / 3.0).epsilon(0.15));
  CHECK(parse_output_value(r.output, "standard_error") < 0.01);
}

TEST_CASE("torus traces the published curve") {
  std::string dir = make_temp_dir("cli_torus");
  CommandResult r = cli(
      "torus --lambda0 0.5 --lambda1 0.5 --e0 1 --e1 1 --steps 100 --out " + dir,
      dir);
  REQUIRE(r.exit_code == 0);
  CHECK(parse_output_value(r.output, "rows") == 100.0);
  CHECK(parse_output_value(r.output, "minor_radius") == 1.0);
  RealMatrix pts = read_real_matrix_csv(dir + "/torus.csv", 1);
  REQUIRE(pts.rows() == 100);
  REQUIRE(pts.cols() == 4);
  CHECK(pts(0, 0) == 0.0);
  CHECK(pts(0, 1) == doctest::Approx(2.0).epsilon(1e-12));  // X = 1 + r at t = 0
  CHECK(pts(0, 2) == 0.0);
  CHECK(pts(0, 3) == 0.0);
  double r_minor = 1.0;
  for (int i = 0; i < pts.rows(); ++i) {
    double ring = std::sqrt(pts(i, 1) * pts(i, 1) + pts(i, 2) * pts(i, 2)) - 1.0;
    double closure = ring * ring + pts(i, 3) * pts(i, 3);
    CHECK(closure == doctest::Approx(r_minor * r_minor).epsilon(1e-9));
  }
}

TEST_CASE("degenerate torus weights collapse to the unit circle") {
  std::string dir = make_temp_dir("cli_torus_degen");
  CommandResult r =
      cli("torus --lambda0 1 --lambda1 0 --steps 50 --out " + dir, dir);
  REQUIRE(r.exit_code == 0);
  CHECK(parse_output_value(r.output, "minor_radius") == 0.0);
  RealMatrix pts = read_real_matrix_csv(dir + "/torus.csv", 1);
  for (int i = 0; i < pts.rows(); ++i) {
    double radius = std::sqrt(pts(i, 1) * pts(i, 1) + pts(i, 2) * pts(i, 2));
    CHECK(radius == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(pts(i, 3) == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK(cli("torus --lambda0 0.5 --lambda1 0.6 --out " + dir, dir).exit_code == 3);
}
