#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "wqf/errors.hpp"
#include "wqf/experiments.hpp"

namespace {

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << body;
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

void add_shared_flags(CLI::App* cmd, wqf::ExperimentConfig& cfg) {
  cmd->add_option("--n", cfg.n, "Dimension")->capture_default_str();
  cmd->add_option("--k", cfg.dof, "Wishart degrees of freedom")->capture_default_str();
  cmd->add_option("--seed", cfg.base_seed, "Base seed")->capture_default_str();
  cmd->add_option("--runs", cfg.runs, "Independent runs")->capture_default_str();
  cmd->add_option("--out", cfg.output_path, "Output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wishart quadratic-form moments and SGD noise experiments"};
  app.require_subcommand(1);

  wqf::ExperimentConfig cfg;

  CLI::App* conv = app.add_subcommand(
      "moment-convergence", "Monte Carlo convergence of the E(QBQ) estimate (CSV)");
  add_shared_flags(conv, cfg);
  conv->add_option("--grid", cfg.sample_grid, "Sample counts, comma separated")
      ->delimiter(',')
      ->capture_default_str();

  CLI::App* sgd = app.add_subcommand(
      "sgd-compare", "SGD vs averaged SGD on a random quadratic objective (CSV)");
  add_shared_flags(sgd, cfg);
  sgd->add_option("--iters", cfg.sgd_iters, "Iteration count")->capture_default_str();
  sgd->add_option("--gamma", cfg.sgd_gamma, "Constant step length")->capture_default_str();
  sgd->add_option("--cond", cfg.cond_a, "Condition number of A")->capture_default_str();
  sgd->add_option("--norm", cfg.norm_a, "Spectral norm of A")->capture_default_str();
  sgd->add_option("--stride", cfg.record_stride, "Record every Nth iteration")
      ->capture_default_str();

  CLI::App* check = app.add_subcommand(
      "moment-check", "Cross-check the closed-form moment paths (text report)");
  add_shared_flags(check, cfg);
  check->add_option("--threshold", cfg.check_threshold, "Max relative error to pass")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    std::string body;
    int exit_code = 0;
    if (conv->parsed()) {
      cfg.experiment = wqf::ExperimentKind::moment_convergence;
      body = wqf::moment_convergence_csv(cfg);
    } else if (sgd->parsed()) {
      cfg.experiment = wqf::ExperimentKind::sgd_compare;
      body = wqf::sgd_compare_csv(cfg);
    } else {
      cfg.experiment = wqf::ExperimentKind::moment_check;
      const wqf::MomentCheckReport report = wqf::compute_moment_check(cfg);
      body = wqf::moment_check_text(cfg);
      exit_code = report.all_pass ? 0 : 5;
    }
    write_output(cfg.output_path, body);
    return exit_code;
  } catch (const wqf::DivergenceError& e) {
    std::cerr << "divergence error: " << e.what() << "\n";
    return 3;
  } catch (const wqf::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
