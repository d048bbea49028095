#pragma once

#include <utility>
#include <vector>

#include "wqf/quadmodel.hpp"
#include "wqf/rng.hpp"

namespace wqf {

enum class Method { sgd, asgd };

struct SgdConfig {
  double step_length = 1e-3;
  long max_iters = 100000;
  long record_stride = 1000;  // plus 1-2-5 decade checkpoints and the last iterate
  RngSeed seed;
  bool retain_history = false;  // keep full iterate histories (diagnostics only)
};

// Metrics of one recorded iteration, all evaluated at the method's reported
// iterate (the raw iterate for SGD, the running average for ASGD).
struct TrajectoryRecord {
  long iter;
  double grad_norm;        // ||grad f(x_k)||_2
  double dist_opt;         // ||x_k||_2, the optimum being the origin
  double noise_mean_err;   // ||running mean of the noise so far||_2
  double cov_dist;         // ||Cov(noise at x_k) - Sigma||_2
};

struct RunOutput {
  Method method;
  std::vector<TrajectoryRecord> records;  // strictly increasing iter
  VectorXd final_x;                       // reported iterate after max_iters

  // Filled only with retain_history: the underlying SGD iterates x_1..x_K and
  // the method's reported iterates at the same indices.
  std::vector<VectorXd> history;
  std::vector<VectorXd> reported_history;
};

// One update x - step * (a (a^T x) + b).
VectorXd sgd_step(const VectorXd& x, const StochasticDraw& draw, double step_length);

// Constant-step SGD with one fresh draw per iteration. Deterministic in
// (model, x0, cfg). Throws DivergenceError (with the iteration index) when
// ||x|| exceeds 1e12 or turns non-finite.
RunOutput run_sgd(const QuadraticModel& model, const VectorXd& x0, const SgdConfig& cfg);

// Same underlying SGD sequence (same seed, same draws, bit-identical
// iterates); reports the running average xbar_k = (1/k) sum_{l<=k} x_l,
// maintained incrementally with xbar_0 = x0.
RunOutput run_asgd(const QuadraticModel& model, const VectorXd& x0, const SgdConfig& cfg);

// (noise_mean_err, cov_dist) at one history point: the norm of the running
// noise mean (its exact expectation is zero) and the spectral distance of the
// exact noise covariance at x to the scale matrix.
std::pair<double, double> noise_metrics(const QuadraticModel& model,
                                        const VectorXd& x_hist_point,
                                        const VectorXd& running_noise_mean,
                                        const SpdMatrix& scale);

}  // namespace wqf
