#include "wqf/sgd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wqf/errors.hpp"

namespace wqf {

namespace {

void validate_config(const SgdConfig& cfg) {
  // gamma = 0 is a legitimate degenerate run (the iterate stays put), so only
  // negative or non-finite step lengths are rejected.
  if (!(cfg.step_length >= 0.0) || !std::isfinite(cfg.step_length)) {
    throw std::invalid_argument("SgdConfig: step_length must be finite and >= 0");
  }
  if (cfg.max_iters < 1) {
    throw std::invalid_argument("SgdConfig: max_iters must be >= 1");
  }
  if (cfg.record_stride < 1) {
    throw std::invalid_argument("SgdConfig: record_stride must be >= 1");
  }
}

// Stride multiples, 1-2-5 decade checkpoints (for clean log-log plots), and
// the final iteration; sorted and deduplicated.
std::vector<long> record_points(long max_iters, long stride) {
  std::vector<long> points;
  points.reserve(static_cast<std::size_t>(max_iters / stride) + 32);
  for (long k = stride; k <= max_iters; k += stride) {
    points.push_back(k);
  }
  for (long decade = 1; decade <= max_iters; decade *= 10) {
    for (long mult : {1L, 2L, 5L}) {
      const long k = mult * decade;
      if (k <= max_iters) {
        points.push_back(k);
      }
    }
    if (decade > max_iters / 10) {
      break;
    }
  }
  points.push_back(max_iters);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

RunOutput run_core(const QuadraticModel& model, const VectorXd& x0, const SgdConfig& cfg,
                   Method method) {
  validate_config(cfg);
  if (x0.size() != model.dim()) {
    throw std::invalid_argument("sgd run: x0 has the wrong dimension");
  }
  if (!x0.allFinite()) {
    throw std::invalid_argument("sgd run: x0 must be finite");
  }

  const bool averaged = (method == Method::asgd);
  const std::vector<long> points = record_points(cfg.max_iters, cfg.record_stride);

  Rng rng(cfg.seed);
  VectorXd x = x0;
  VectorXd xbar = x0;
  VectorXd noise_sum = VectorXd::Zero(model.dim());

  RunOutput out;
  out.method = method;
  out.records.reserve(points.size());
  if (cfg.retain_history) {
    out.history.reserve(static_cast<std::size_t>(cfg.max_iters));
    out.reported_history.reserve(static_cast<std::size_t>(cfg.max_iters));
  }

  std::size_t next_point = 0;
  for (long k = 1; k <= cfg.max_iters; ++k) {
    const StochasticDraw draw = sample_function(model, rng);
    // The noise sample of iteration k, evaluated where this method stands.
    noise_sum += noise(model, draw, averaged ? xbar : x);

    x = sgd_step(x, draw, cfg.step_length);
    if (!(x.norm() <= 1e12)) {
      throw DivergenceError("sgd run: iterate diverged at iteration " + std::to_string(k), k);
    }
    if (averaged) {
      if (k == 1) {
        xbar = x;  // exact: the average of one iterate is that iterate
      } else {
        xbar += (x - xbar) / static_cast<double>(k);
      }
    }

    const VectorXd& reported = averaged ? xbar : x;
    if (cfg.retain_history) {
      out.history.push_back(x);
      out.reported_history.push_back(reported);
    }
    if (next_point < points.size() && points[next_point] == k) {
      ++next_point;
      const auto [mean_err, cov_dist] =
          noise_metrics(model, reported, noise_sum / static_cast<double>(k), model.scale());
      out.records.push_back(TrajectoryRecord{k, true_gradient(model, reported).norm(),
                                             reported.norm(), mean_err, cov_dist});
    }
  }
  out.final_x = averaged ? xbar : x;
  return out;
}

}  // namespace

VectorXd sgd_step(const VectorXd& x, const StochasticDraw& draw, double step_length) {
  if (x.size() != draw.a_vec.size() || x.size() != draw.b_vec.size()) {
    throw std::invalid_argument("sgd_step: dimension mismatch");
  }
  return x - step_length * (draw.a_vec * draw.a_vec.dot(x) + draw.b_vec);
}

RunOutput run_sgd(const QuadraticModel& model, const VectorXd& x0, const SgdConfig& cfg) {
  return run_core(model, x0, cfg, Method::sgd);
}

RunOutput run_asgd(const QuadraticModel& model, const VectorXd& x0, const SgdConfig& cfg) {
  return run_core(model, x0, cfg, Method::asgd);
}

std::pair<double, double> noise_metrics(const QuadraticModel& model,
                                        const VectorXd& x_hist_point,
                                        const VectorXd& running_noise_mean,
                                        const SpdMatrix& scale) {
  if (x_hist_point.size() != model.dim() || running_noise_mean.size() != model.dim() ||
      scale.dim() != model.dim()) {
    throw std::invalid_argument("noise_metrics: dimension mismatch");
  }
  const double mean_err = running_noise_mean.norm();
  const MatrixXd cov = noise_covariance(model, x_hist_point).cov;
  const double cov_dist = spectral_norm(cov - scale.mat());
  return {mean_err, cov_dist};
}

}  // namespace wqf
