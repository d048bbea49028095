#include "wqf/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wqf/errors.hpp"
#include "wqf/matgen.hpp"
#include "wqf/moments.hpp"

namespace wqf {

namespace {

// Shortest round-trip formatting, locale independent. Keeps CSV output
// byte-identical across invocations.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string fmt(long v) { return std::to_string(v); }

void validate_common(const ExperimentConfig& cfg) {
  if (cfg.n < 1) {
    throw std::invalid_argument("experiment config: n must be >= 1");
  }
  if (cfg.dof < 1) {
    throw std::invalid_argument("experiment config: k must be >= 1");
  }
  if (cfg.runs < 1) {
    throw std::invalid_argument("experiment config: runs must be >= 1");
  }
}

std::string join_grid(const std::vector<long>& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(grid[i]);
  }
  return out;
}

// Mean and sample standard deviation (zero for a single value).
std::pair<double, double> mean_std(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) {
    mean += v;
  }
  mean /= n;
  if (values.size() < 2) {
    return {mean, 0.0};
  }
  double ss = 0.0;
  for (double v : values) {
    ss += (v - mean) * (v - mean);
  }
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

std::vector<ConvergenceRow> compute_moment_convergence(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.sample_grid.empty()) {
    throw std::invalid_argument("moment-convergence: sample grid must not be empty");
  }

  // rel_errs[g] collects the relative error at grid point g across runs.
  std::vector<std::vector<double>> rel_errs(cfg.sample_grid.size());
  for (int run = 0; run < cfg.runs; ++run) {
    Rng rng(cfg.base_seed, static_cast<std::uint64_t>(run));
    const SymmetricMatrix b = random_symmetric(cfg.n, rng);
    const SpdMatrix sigma = random_spd(cfg.n, rng);
    const WishartParams params(sigma, cfg.dof);

    const MatrixXd exact = expected_qbq_eigen(params, b).value;
    const std::vector<MomentResult> estimates =
        empirical_qbq_grid(params, b, cfg.sample_grid, rng);
    for (std::size_t g = 0; g < estimates.size(); ++g) {
      rel_errs[g].push_back(spectral_rel_error(estimates[g].value, exact));
    }
  }

  std::vector<ConvergenceRow> rows;
  rows.reserve(cfg.sample_grid.size());
  for (std::size_t g = 0; g < cfg.sample_grid.size(); ++g) {
    const auto [mean, sd] = mean_std(rel_errs[g]);
    rows.push_back(ConvergenceRow{cfg.sample_grid[g], mean, sd});
  }
  return rows;
}

std::string moment_convergence_csv(const ExperimentConfig& cfg) {
  const std::vector<ConvergenceRow> rows = compute_moment_convergence(cfg);
  std::string out;
  out += "# experiment=moment-convergence\n";
  out += "# n=" + std::to_string(cfg.n) + "\n";
  out += "# k=" + std::to_string(cfg.dof) + "\n";
  out += "# seed=" + std::to_string(cfg.base_seed) + "\n";
  out += "# runs=" + std::to_string(cfg.runs) + "\n";
  out += "# grid=" + join_grid(cfg.sample_grid) + "\n";
  out += "# sampling=nested\n";
  out += "m,mean_rel_err,std_rel_err\n";
  for (const ConvergenceRow& row : rows) {
    out += fmt(row.m) + "," + fmt(row.mean_rel_err) + "," + fmt(row.std_rel_err) + "\n";
  }
  return out;
}

SgdComparison compute_sgd_compare(const ExperimentConfig& cfg, int run_index) {
  validate_common(cfg);
  if (run_index < 0) {
    throw std::invalid_argument("sgd-compare: run index must be >= 0");
  }
  if (cfg.n < 2) {
    throw std::invalid_argument("sgd-compare: n must be >= 2 (conditioned A needs two eigenvalues)");
  }

  // Streams 2r / 2r+1: problem setup and iteration draws of replicate r.
  Rng setup(cfg.base_seed, 2 * static_cast<std::uint64_t>(run_index));
  const SpdMatrix sigma = random_spd(cfg.n, setup);
  const SymmetricMatrix a = random_constrained_psd(cfg.n, cfg.norm_a, cfg.cond_a, setup);
  VectorXd x0(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    x0(i) = setup.normal();
  }
  x0 /= x0.norm();

  const QuadraticModel model(a.mat(), sigma);
  SgdConfig run_cfg;
  run_cfg.step_length = cfg.sgd_gamma;
  run_cfg.max_iters = cfg.sgd_iters;
  run_cfg.record_stride = cfg.record_stride;
  run_cfg.seed = RngSeed{cfg.base_seed, 2 * static_cast<std::uint64_t>(run_index) + 1};

  SgdComparison out{run_sgd(model, x0, run_cfg), run_asgd(model, x0, run_cfg)};
  return out;
}

std::string sgd_compare_csv(const ExperimentConfig& cfg) {
  const SgdComparison cmp = compute_sgd_compare(cfg);
  std::string out;
  out += "# experiment=sgd-compare\n";
  out += "# n=" + std::to_string(cfg.n) + "\n";
  out += "# seed=" + std::to_string(cfg.base_seed) + "\n";
  out += "# iters=" + std::to_string(cfg.sgd_iters) + "\n";
  out += "# gamma=" + fmt(cfg.sgd_gamma) + "\n";
  out += "# cond=" + fmt(cfg.cond_a) + "\n";
  out += "# norm=" + fmt(cfg.norm_a) + "\n";
  out += "# stride=" + std::to_string(cfg.record_stride) + "\n";
  out += "method,iter,grad_norm,dist_opt,noise_mean_err,cov_dist\n";
  for (const RunOutput* run : {&cmp.sgd, &cmp.asgd}) {
    const char* name = (run->method == Method::sgd) ? "sgd" : "asgd";
    for (const TrajectoryRecord& rec : run->records) {
      out += std::string(name) + "," + fmt(rec.iter) + "," + fmt(rec.grad_norm) + "," +
             fmt(rec.dist_opt) + "," + fmt(rec.noise_mean_err) + "," + fmt(rec.cov_dist) + "\n";
    }
  }
  return out;
}

MomentCheckReport compute_moment_check(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (!(cfg.check_threshold > 0.0)) {
    throw std::invalid_argument("moment-check: threshold must be > 0");
  }

  MomentCheckReport report;
  report.all_pass = true;
  report.rows.reserve(static_cast<std::size_t>(cfg.runs));
  for (int run = 0; run < cfg.runs; ++run) {
    Rng rng(cfg.base_seed, static_cast<std::uint64_t>(run));
    const SymmetricMatrix b = random_symmetric(cfg.n, rng);
    const SpdMatrix sigma = random_spd(cfg.n, rng);
    const WishartParams params(sigma, cfg.dof);

    const MatrixXd alg = expected_qbq(params, b).value;
    const MatrixXd eig = expected_qbq_eigen(params, b).value;
    // Cap lifted to the configured n: the check is opt-in and small.
    const MatrixXd kro = expected_qbq_kronecker(params, b, cfg.n).value;

    double err = spectral_rel_error(eig, alg);
    err = std::max(err, spectral_rel_error(kro, alg));
    err = std::max(err, spectral_rel_error(kro, eig));

    const SymmetricMatrix identity(MatrixXd::Identity(cfg.n, cfg.n));
    err = std::max(err, spectral_rel_error(second_moment(params).value,
                                           expected_qbq(params, identity).value));

    const bool pass = err <= cfg.check_threshold;
    report.all_pass = report.all_pass && pass;
    report.rows.push_back(MomentCheckRow{static_cast<std::uint64_t>(run), err, pass});
  }
  return report;
}

std::string moment_check_text(const ExperimentConfig& cfg) {
  const MomentCheckReport report = compute_moment_check(cfg);
  char line[160];
  std::string out;
  std::snprintf(line, sizeof(line), "moment-check n=%d k=%d runs=%d seed=%llu threshold=%g\n",
                cfg.n, cfg.dof, cfg.runs, static_cast<unsigned long long>(cfg.base_seed),
                cfg.check_threshold);
  out += line;
  int passed = 0;
  for (const MomentCheckRow& row : report.rows) {
    std::snprintf(line, sizeof(line), "stream %llu: max_rel_err=%.3e %s\n",
                  static_cast<unsigned long long>(row.stream), row.max_rel_err,
                  row.pass ? "PASS" : "FAIL");
    out += line;
    passed += row.pass ? 1 : 0;
  }
  std::snprintf(line, sizeof(line), "summary: %d/%d PASS\n", passed, cfg.runs);
  out += line;
  return out;
}

}  // namespace wqf
