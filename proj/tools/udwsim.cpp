// Command-line front end: sweep datasets and analysis reports for the
// one-detector-accelerated decoherence model.
//
// Exit codes: 0 success, 1 usage/validation error, 2 numeric failure
// (non-convergence or a failed frozen-set prediction), 3 I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "udw/analysis.hpp"
#include "udw/errors.hpp"
#include "udw/sweep.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

udw::OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return udw::OutputFormat::kCsv;
  if (name == "json") return udw::OutputFormat::kJson;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected csv or json)");
}

void write_text_report(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw udw::IoError("cannot open output file: " + path);
  out << text;
  out.flush();
  if (!out.good()) throw udw::IoError("failed writing report: " + path);
}

struct SweepCli {
  std::string theta = "pi/4";
  double q = 0.9999;
  double nu2 = 0.0;
  double min = 0.0;
  double max = 0.0;
  int steps = 200;
  std::string theta_min = "0";
  std::string theta_max = "pi/2";
  int theta_steps = 50;
  double nu_min = 0.0;
  double nu_max = 0.05;
  int nu_steps = 50;
  std::string out = "-";
  std::string format = "csv";
  bool allow_q1 = false;
};

int run_sweep_q(const SweepCli& cli) {
  udw::SweepConfig config;
  config.theta = udw::parse_angle(cli.theta);
  config.nu2 = cli.nu2;
  config.min = cli.min;
  config.max = cli.max;
  config.steps = cli.steps;
  config.allow_q1 = cli.allow_q1;
  udw::write_dataset(cli.out, udw::sweep_q(config), parse_format(cli.format));
  return 0;
}

int run_sweep_nu(const SweepCli& cli) {
  udw::SweepConfig config;
  config.theta = udw::parse_angle(cli.theta);
  config.q = cli.q;
  config.min = cli.min;
  config.max = cli.max;
  config.steps = cli.steps;
  config.allow_q1 = cli.allow_q1;
  udw::write_dataset(cli.out, udw::sweep_nu(config), parse_format(cli.format));
  return 0;
}

int run_surface(const SweepCli& cli) {
  udw::SweepConfig config;
  config.q = cli.q;
  config.min = udw::parse_angle(cli.theta_min);
  config.max = udw::parse_angle(cli.theta_max);
  config.steps = cli.theta_steps;
  config.nu_min = cli.nu_min;
  config.nu_max = cli.nu_max;
  config.nu_steps = cli.nu_steps;
  config.allow_q1 = cli.allow_q1;
  udw::write_dataset(cli.out, udw::surface(config), parse_format(cli.format));
  return 0;
}

struct FrozenScanCli {
  int theta_steps = 25;
  double nu2_max = 0.1;
  int nu2_steps = 25;
  int q_samples = 101;
  double q_max = 0.99;
  double tol = udw::kFrozenDerivativeTol;
  std::string out = "-";
};

int run_frozen_scan(const FrozenScanCli& cli) {
  const auto thetas = udw::linspace(0.0, kPi / 2.0, cli.theta_steps);
  const auto nu2s = udw::linspace(0.0, cli.nu2_max, cli.nu2_steps);
  const auto qs = udw::linspace(0.0, cli.q_max, cli.q_samples);
  const udw::FrozenScanResult scan =
      udw::frozen_scan(thetas, nu2s, qs, cli.tol);

  nlohmann::ordered_json report;
  report["theta_grid"] = {{"min", 0.0}, {"max", kPi / 2.0},
                          {"steps", cli.theta_steps}};
  report["nu2_grid"] = {{"min", 0.0}, {"max", cli.nu2_max},
                        {"steps", cli.nu2_steps}};
  report["q_samples"] = {{"min", 0.0}, {"max", cli.q_max},
                         {"steps", cli.q_samples}};
  report["tolerance"] = cli.tol;
  nlohmann::ordered_json frozen = nlohmann::ordered_json::array();
  for (const auto& point : scan.frozen_points) {
    frozen.push_back({{"theta", point.theta}, {"nu2", point.nu2}});
  }
  report["frozen_points"] = std::move(frozen);
  report["frozen_set_is_boundary_only"] = scan.frozen_set_is_boundary_only;
  report["max_interior_abs_dcl1_dq"] = scan.max_abs_derivative_elsewhere;
  report["max_interior_location"] = {{"theta", scan.max_location.theta},
                                     {"nu2", scan.max_location.nu2},
                                     {"q", scan.max_location_q}};
  report["max_interior_abs_dcre_dq_numeric"] =
      scan.max_abs_re_derivative_elsewhere;

  write_text_report(cli.out, report.dump(2) + "\n");
  return scan.frozen_set_is_boundary_only ? 0 : 2;
}

struct SuddenDeathCli {
  std::string theta = "pi/4";
  std::optional<double> nu2;
  std::optional<double> q;
  bool as_json = false;
};

int run_sudden_death(const SuddenDeathCli& cli) {
  if (cli.nu2.has_value() == cli.q.has_value()) {
    throw std::invalid_argument(
        "pass exactly one of --nu2 (death in q) or --q (death in nu)");
  }
  const double theta = udw::parse_angle(cli.theta);
  const bool in_q = cli.nu2.has_value();
  const udw::SuddenDeathResult result =
      in_q ? udw::sudden_death_q(theta, *cli.nu2)
           : udw::sudden_death_nu(theta, *cli.q);

  if (cli.as_json) {
    nlohmann::ordered_json report;
    report["axis"] = in_q ? "q" : "nu";
    report["theta"] = theta;
    if (in_q) {
      report["nu2"] = *cli.nu2;
    } else {
      report["q"] = *cli.q;
    }
    if (result.threshold) {
      report["threshold"] = *result.threshold;
      report["bracket"] = {result.bracket.first, result.bracket.second};
    } else {
      report["threshold"] = nullptr;
    }
    report["iterations"] = result.iterations;
    report["validity_warning"] = result.validity_warning;
    std::cout << report.dump(2) << "\n";
    return 0;
  }

  if (!result.threshold) {
    std::cout << "no finite sudden death: concurrence stays positive for all "
                 "q < 1\n";
    return 0;
  }
  char line[160];
  if (in_q) {
    std::snprintf(line, sizeof(line),
                  "q* = %.10g (bracket [%.12g, %.12g], %d bisection "
                  "iterations)\n",
                  *result.threshold, result.bracket.first,
                  result.bracket.second, result.iterations);
  } else {
    std::snprintf(line, sizeof(line), "nu* = %.10g (nu*^2 = %.10g)\n",
                  *result.threshold,
                  *result.threshold * *result.threshold);
  }
  std::cout << line;
  if (result.validity_warning) {
    std::cerr << "warning: threshold lies outside the nu^2 << 1 validity "
                 "regime\n";
  }
  return 0;
}

struct ReproduceCli {
  std::string figure;
  std::string out_dir = ".";
  std::string format = "csv";
};

int run_reproduce(const ReproduceCli& cli) {
  const udw::OutputFormat format = parse_format(cli.format);
  const char* extension = format == udw::OutputFormat::kCsv ? ".csv" : ".json";
  for (const udw::ReproduceJob& job : udw::reproduce_jobs(cli.figure)) {
    std::vector<udw::SweepRecord> records;
    switch (job.kind) {
      case udw::ReproduceJob::Kind::kSweepQ:
        records = udw::sweep_q(job.config);
        break;
      case udw::ReproduceJob::Kind::kSweepNu:
        records = udw::sweep_nu(job.config);
        break;
      case udw::ReproduceJob::Kind::kSurface:
        records = udw::surface(job.config);
        break;
    }
    const std::string path = cli.out_dir + "/" + job.name + extension;
    udw::write_dataset(path, records, format);
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decoherence of an entangled detector pair with one uniformly "
      "accelerated detector: coherence/entanglement sweeps and analysis"};
  app.require_subcommand(1);

  SweepCli sweep_cli;
  FrozenScanCli frozen_cli;
  SuddenDeathCli death_cli;
  ReproduceCli reproduce_cli;

  CLI::App* sweep_q_cmd = app.add_subcommand(
      "sweep-q", "Sweep the acceleration parameter q at fixed theta, nu2");
  sweep_q_cmd->add_option("--theta", sweep_cli.theta,
                          "initial-state angle (radians or e.g. pi/4)");
  sweep_q_cmd->add_option("--nu2", sweep_cli.nu2, "effective coupling nu^2")
      ->required();
  sweep_q_cmd->add_option("--min", sweep_cli.min, "first q sample");
  sweep_q_cmd->add_option("--max", sweep_cli.max, "last q sample")
      ->default_val(0.999);
  sweep_q_cmd->add_option("--steps", sweep_cli.steps, "number of samples");
  sweep_q_cmd->add_option("--out", sweep_cli.out, "output path ('-' = stdout)");
  sweep_q_cmd->add_option("--format", sweep_cli.format, "csv or json");
  sweep_q_cmd->add_flag("--allow-q1", sweep_cli.allow_q1,
                        "permit q up to 1 (needs nu > 0 at q = 1)");

  CLI::App* sweep_nu_cmd = app.add_subcommand(
      "sweep-nu", "Sweep the coupling nu at fixed theta, q");
  sweep_nu_cmd->add_option("--theta", sweep_cli.theta,
                           "initial-state angle (radians or e.g. pi/4)");
  sweep_nu_cmd->add_option("--q", sweep_cli.q, "acceleration parameter")
      ->required();
  sweep_nu_cmd->add_option("--min", sweep_cli.min, "first nu sample");
  sweep_nu_cmd->add_option("--max", sweep_cli.max, "last nu sample")
      ->default_val(0.05);
  sweep_nu_cmd->add_option("--steps", sweep_cli.steps, "number of samples");
  sweep_nu_cmd->add_option("--out", sweep_cli.out,
                           "output path ('-' = stdout)");
  sweep_nu_cmd->add_option("--format", sweep_cli.format, "csv or json");
  sweep_nu_cmd->add_flag("--allow-q1", sweep_cli.allow_q1,
                         "permit q up to 1 (needs nu > 0 at q = 1)");

  CLI::App* surface_cmd = app.add_subcommand(
      "surface", "Grid over theta x nu at fixed q (defaults to 0.9999)");
  surface_cmd->add_option("--q", sweep_cli.q, "acceleration parameter");
  surface_cmd->add_option("--min", sweep_cli.theta_min, "first theta sample");
  surface_cmd->add_option("--max", sweep_cli.theta_max, "last theta sample");
  surface_cmd->add_option("--steps", sweep_cli.theta_steps, "theta samples");
  surface_cmd->add_option("--nu-min", sweep_cli.nu_min, "first nu sample");
  surface_cmd->add_option("--nu-max", sweep_cli.nu_max, "last nu sample");
  surface_cmd->add_option("--nu-steps", sweep_cli.nu_steps, "nu samples");
  surface_cmd->add_option("--out", sweep_cli.out, "output path ('-' = stdout)");
  surface_cmd->add_option("--format", sweep_cli.format, "csv or json");
  surface_cmd->add_flag("--allow-q1", sweep_cli.allow_q1,
                        "permit q up to 1 (needs nu > 0 at q = 1)");

  CLI::App* frozen_cmd = app.add_subcommand(
      "frozen-scan",
      "Scan for q-invariant coherence; exits 0 iff frozen points sit only "
      "on the trivial boundary");
  frozen_cmd->add_option("--theta-steps", frozen_cli.theta_steps,
                         "theta grid size over [0, pi/2]");
  frozen_cmd->add_option("--nu2-max", frozen_cli.nu2_max, "nu^2 grid top");
  frozen_cmd->add_option("--nu2-steps", frozen_cli.nu2_steps, "nu^2 grid size");
  frozen_cmd->add_option("--q-samples", frozen_cli.q_samples,
                         "q samples per grid point");
  frozen_cmd->add_option("--q-max", frozen_cli.q_max, "largest q sample");
  frozen_cmd->add_option("--tol", frozen_cli.tol, "frozen derivative bound");
  frozen_cmd->add_option("--out", frozen_cli.out,
                         "JSON report path ('-' = stdout)");

  CLI::App* death_cmd = app.add_subcommand(
      "sudden-death",
      "Locate the entanglement sudden-death threshold in q or in nu");
  death_cmd->add_option("--theta", death_cli.theta,
                        "initial-state angle (radians or e.g. pi/4)");
  death_cmd->add_option("--nu2", death_cli.nu2,
                        "fixed nu^2: solve for the death acceleration q*");
  death_cmd->add_option("--q", death_cli.q,
                        "fixed q: solve for the death coupling nu*");
  death_cmd->add_flag("--json", death_cli.as_json, "machine-readable output");

  CLI::App* reproduce_cmd = app.add_subcommand(
      "reproduce", "Emit the canned fig1/fig2 datasets");
  reproduce_cmd
      ->add_option("figure", reproduce_cli.figure, "fig1 or fig2")
      ->required();
  reproduce_cmd->add_option("--out-dir", reproduce_cli.out_dir,
                            "directory for the dataset files");
  reproduce_cmd->add_option("--format", reproduce_cli.format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(sweep_q_cmd)) return run_sweep_q(sweep_cli);
    if (app.got_subcommand(sweep_nu_cmd)) return run_sweep_nu(sweep_cli);
    if (app.got_subcommand(surface_cmd)) return run_surface(sweep_cli);
    if (app.got_subcommand(frozen_cmd)) return run_frozen_scan(frozen_cli);
    if (app.got_subcommand(death_cmd)) return run_sudden_death(death_cli);
    if (app.got_subcommand(reproduce_cmd)) return run_reproduce(reproduce_cli);
  } catch (const udw::ConvergenceError& e) {
    std::cerr << "numeric failure: " << e.what()
              << " (best value " << e.best_value << ")\n";
    return 2;
  } catch (const udw::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
