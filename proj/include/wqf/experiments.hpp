#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wqf/sgd.hpp"

namespace wqf {

enum class ExperimentKind { moment_convergence, sgd_compare, moment_check };

// Full configuration of one experiment invocation. Field defaults are the
// CLI defaults (desk scale: minutes, not hours; larger scales via flags).
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::moment_convergence;
  int n = 10;
  int dof = 3;
  std::uint64_t base_seed = 42;
  int runs = 10;

  // moment-convergence
  std::vector<long> sample_grid = {1, 10, 100, 1000, 10000, 100000};

  // sgd-compare
  long sgd_iters = 100000;
  double sgd_gamma = 1e-3;
  double cond_a = 5.0;
  double norm_a = 1.0;
  long record_stride = 1000;

  // moment-check
  double check_threshold = 1e-10;

  std::string output_path;  // empty: stdout
};

// One aggregated row of the convergence experiment: mean and standard
// deviation over runs of ||E_exact - E_empiric||_2 / ||E_exact||_2.
struct ConvergenceRow {
  long m;
  double mean_rel_err;
  double std_rel_err;
};

// Per run: fresh symmetric B and SPD Sigma, exact value through the
// eigendecomposition path, empirical estimates along cfg.sample_grid from a
// single growing sample stream. Rows aggregate over cfg.runs runs.
std::vector<ConvergenceRow> compute_moment_convergence(const ExperimentConfig& cfg);

// CSV document: "# key=value" metadata lines, header m,mean_rel_err,std_rel_err,
// one row per grid entry. Byte-identical across invocations with equal config.
std::string moment_convergence_csv(const ExperimentConfig& cfg);

struct SgdComparison {
  RunOutput sgd;
  RunOutput asgd;
};

// One coupled SGD/ASGD pair: random SPD Sigma, symmetric PSD A with
// prescribed norm and condition number, normalized Gaussian start, identical
// draw streams for both methods. run_index selects an independent replicate.
SgdComparison compute_sgd_compare(const ExperimentConfig& cfg, int run_index = 0);

// CSV document with header method,iter,grad_norm,dist_opt,noise_mean_err,cov_dist;
// all sgd rows first, then all asgd rows, each ordered by iteration.
std::string sgd_compare_csv(const ExperimentConfig& cfg);

struct MomentCheckRow {
  std::uint64_t stream;
  double max_rel_err;  // max pairwise error across the closed-form paths
  bool pass;
};

struct MomentCheckReport {
  std::vector<MomentCheckRow> rows;
  bool all_pass;
};

// Self-test: random (Sigma, B) per stream, all three closed-form paths plus
// the second-moment consistency check, PASS iff the largest pairwise relative
// error stays within cfg.check_threshold.
MomentCheckReport compute_moment_check(const ExperimentConfig& cfg);

// Human-readable report of compute_moment_check, one line per stream.
std::string moment_check_text(const ExperimentConfig& cfg);

}  // namespace wqf
