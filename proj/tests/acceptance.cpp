// Acceptance gate: one line per criterion, exit 0 iff everything passed.
// The m = 1e6 convergence check takes ~20s and is opt-in via --long.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wqf/experiments.hpp"
#include "wqf/matgen.hpp"
#include "wqf/moments.hpp"
#include "wqf/quadmodel.hpp"
#include "wqf/sgd.hpp"
#include "wqf/wishart.hpp"

using namespace wqf;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& line) {
  std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", line.c_str());
  if (!ok) {
    ++g_failures;
  }
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

double loglog_slope(const std::vector<ConvergenceRow>& rows) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(rows.size());
  for (const ConvergenceRow& row : rows) {
    const double x = std::log10(static_cast<double>(row.m));
    const double y = std::log10(row.mean_rel_err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 1. The three closed-form paths agree on random instances across the
//    supported dimension/dof range.
void criterion_paths() {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(9001, static_cast<std::uint64_t>(trial));
    const int n = 1 + static_cast<int>(rng.uniform() * 10.0);
    const int k = 1 + static_cast<int>(rng.uniform() * 20.0);
    const SymmetricMatrix b = random_symmetric(n, rng);
    const SpdMatrix sigma = random_spd(n, rng);
    const WishartParams params(sigma, k);

    const MatrixXd alg = expected_qbq(params, b).value;
    const MatrixXd eig = expected_qbq_eigen(params, b).value;
    const MatrixXd kro = expected_qbq_kronecker(params, b).value;
    worst = std::max(worst, frobenius_rel_error(eig, alg));
    worst = std::max(worst, frobenius_rel_error(kro, alg));
    worst = std::max(worst, frobenius_rel_error(kro, eig));
  }
  report(worst <= 1e-10,
         "1. closed-form paths agree on 100 random instances (max rel err " + num(worst) +
             ", tol 1e-10)");
}

// 2. Scalar anchor: n = 1, sigma = 1, b = 1, k = 3 gives k^2 + 2k = 15.
void criterion_anchor() {
  const SpdMatrix sigma(MatrixXd::Identity(1, 1));
  const SymmetricMatrix b(MatrixXd::Identity(1, 1));
  const WishartParams params(sigma, 3);
  double worst = 0.0;
  worst = std::max(worst, std::abs(expected_qbq(params, b).value(0, 0) - 15.0));
  worst = std::max(worst, std::abs(expected_qbq_eigen(params, b).value(0, 0) - 15.0));
  worst = std::max(worst, std::abs(expected_qbq_kronecker(params, b).value(0, 0) - 15.0));
  report(worst <= 1e-12, "2. scalar chi-square anchor equals 15 (max dev " + num(worst) +
                             ", tol 1e-12)");
}

// 3. Monte Carlo convergence at the default desk scale; optionally the
//    m = 1e6 tail.
void criterion_convergence(bool run_long) {
  const ExperimentConfig cfg;
  const std::vector<ConvergenceRow> rows = compute_moment_convergence(cfg);
  const double err_1e5 = rows.back().mean_rel_err;
  const double slope = loglog_slope(rows);
  const bool ok = (err_1e5 <= 3e-2) && (slope >= -0.65) && (slope <= -0.35);
  report(ok, "3. mean rel err at m=1e5 is " + num(err_1e5) +
                 " (tol 3e-2), log-log slope " + num(slope) + " (target -0.5 +/- 0.15)");

  if (!run_long) {
    std::printf("[SKIP] 3b. m=1e6 tail (pass --long to run)\n");
    return;
  }
  ExperimentConfig long_cfg;
  long_cfg.sample_grid = {1, 10, 100, 1000, 10000, 100000, 1000000};
  const std::vector<ConvergenceRow> long_rows = compute_moment_convergence(long_cfg);
  const double err_1e6 = long_rows.back().mean_rel_err;
  report(err_1e6 >= 5e-4 && err_1e6 <= 2e-2,
         "3b. mean rel err at m=1e6 is " + num(err_1e6) + " (band [5e-4, 2e-2])");
}

// 4. Empirical Wishart mean matches k * sigma.
void criterion_mean_law() {
  Rng rng(4242, 0);
  const SpdMatrix sigma = random_spd(10, rng);
  const WishartParams params(sigma, 3);
  const long m = 100000;
  MatrixXd acc = MatrixXd::Zero(10, 10);
  for (long i = 0; i < m; ++i) {
    acc += sample_wishart(params, rng).q;
  }
  const double err = frobenius_rel_error(acc / static_cast<double>(m), 3.0 * sigma.mat());
  report(err <= 3e-2, "4. empirical Wishart mean matches k*sigma (rel err " + num(err) +
                          ", tol 3e-2, m=1e5)");
}

// 5. Transformation law: C^T Q C has mean k C^T sigma C for rectangular C.
void criterion_transform_law() {
  Rng rng(4242, 1);
  const SpdMatrix sigma = random_spd(10, rng);
  const MatrixXd c = random_gaussian(10, 6, rng);
  const WishartParams params(sigma, 3);
  const long m = 100000;
  MatrixXd acc = MatrixXd::Zero(6, 6);
  for (long i = 0; i < m; ++i) {
    acc += transform_sample(sample_wishart(params, rng), c);
  }
  const MatrixXd target = 3.0 * c.transpose() * sigma.mat() * c;
  const double err = frobenius_rel_error(acc / static_cast<double>(m), target);
  report(err <= 3e-2, "5. transformed sample mean matches k*C^T*sigma*C (rel err " + num(err) +
                          ", tol 3e-2, m=1e5)");
}

// 6. Noise covariance: exact at the optimum, closed form for sigma = I,
//    empirical agreement on a small instance.
void criterion_noise() {
  Rng rng(4242, 2);
  const SpdMatrix sigma = random_spd(5, rng);
  const SymmetricMatrix a5 = random_constrained_psd(5, 1.0, 5.0, rng);
  const QuadraticModel at_opt(a5.mat(), sigma);
  const double err_opt =
      frobenius_rel_error(noise_covariance(at_opt, VectorXd::Zero(5)).cov, sigma.mat());

  const SymmetricMatrix a6 = random_constrained_psd(6, 1.0, 5.0, rng);
  const QuadraticModel white(a6.mat(), SpdMatrix(MatrixXd::Identity(6, 6)));
  VectorXd x6(6);
  for (int i = 0; i < 6; ++i) {
    x6(i) = rng.normal();
  }
  const MatrixXd aat = a6.mat() * a6.mat().transpose();
  const VectorXd atx = a6.mat().transpose() * x6;
  const MatrixXd closed = aat * x6 * x6.transpose() * aat + atx.squaredNorm() * aat +
                          MatrixXd::Identity(6, 6);
  const double err_white = frobenius_rel_error(noise_covariance(white, x6).cov, closed);

  const SpdMatrix sigma4 = random_spd(4, rng);
  const SymmetricMatrix a4 = random_constrained_psd(4, 1.0, 5.0, rng);
  const QuadraticModel small(a4.mat(), sigma4);
  VectorXd x4(4);
  for (int i = 0; i < 4; ++i) {
    x4(i) = rng.normal();
  }
  const long m = 1000000;
  MatrixXd acc = MatrixXd::Zero(4, 4);
  for (long i = 0; i < m; ++i) {
    const VectorXd xi = noise(small, sample_function(small, rng), x4);
    acc += xi * xi.transpose();
  }
  const double err_emp =
      frobenius_rel_error(acc / static_cast<double>(m), noise_covariance(small, x4).cov);

  const bool ok = (err_opt <= 1e-14) && (err_white <= 1e-12) && (err_emp <= 2e-2);
  report(ok, "6. noise covariance: at optimum " + num(err_opt) + " (tol 1e-14), white form " +
                 num(err_white) + " (tol 1e-12), empirical " + num(err_emp) +
                 " (tol 2e-2, m=1e6)");
}

// 7. Averaging wins jointly (final gradient norm, distance to optimum, tail
//    variance of the gradient norm) on at least 8 of 10 replicates.
void criterion_averaging() {
  const ExperimentConfig cfg;
  auto tail_variance = [](const RunOutput& run) {
    const std::size_t count = run.records.size() / 10;
    const std::size_t start = run.records.size() - count;
    double mean = 0.0;
    for (std::size_t i = start; i < run.records.size(); ++i) mean += run.records[i].grad_norm;
    mean /= static_cast<double>(count);
    double ss = 0.0;
    for (std::size_t i = start; i < run.records.size(); ++i) {
      ss += (run.records[i].grad_norm - mean) * (run.records[i].grad_norm - mean);
    }
    return ss / static_cast<double>(count - 1);
  };

  int wins = 0;
  for (int r = 0; r < 10; ++r) {
    const SgdComparison cmp = compute_sgd_compare(cfg, r);
    const bool win = cmp.asgd.records.back().grad_norm <= cmp.sgd.records.back().grad_norm &&
                     cmp.asgd.records.back().dist_opt <= cmp.sgd.records.back().dist_opt &&
                     tail_variance(cmp.asgd) < tail_variance(cmp.sgd);
    wins += win ? 1 : 0;
  }
  report(wins >= 8, "7. averaging wins jointly on " + std::to_string(wins) +
                        "/10 replicates (need >= 8)");
}

// 8. Stochastic gradients match central finite differences of the sampled
//    objective.
void criterion_finite_difference() {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(9002, static_cast<std::uint64_t>(trial));
    const int n = 1 + trial % 6;
    const SpdMatrix sigma = random_spd(n, rng);
    const QuadraticModel model(random_gaussian(n, n, rng), sigma);
    const StochasticDraw draw = sample_function(model, rng);
    VectorXd x(n);
    for (int i = 0; i < n; ++i) {
      x(i) = rng.normal();
    }

    auto f = [&](const VectorXd& p) {
      const double ap = draw.a_vec.dot(p);
      return 0.5 * ap * ap + draw.b_vec.dot(p);
    };
    const double h = 1e-5;
    VectorXd fd(n);
    for (int i = 0; i < n; ++i) {
      VectorXd lo = x, hi = x;
      hi(i) += h;
      lo(i) -= h;
      fd(i) = (f(hi) - f(lo)) / (2.0 * h);
    }
    const VectorXd g = stochastic_gradient(model, draw, x);
    worst = std::max(worst, (g - fd).norm() / std::max(1.0, g.norm()));
  }
  report(worst <= 1e-6, "8. stochastic gradient matches central differences on 100 instances "
                        "(max rel err " + num(worst) + ", tol 1e-6)");
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 9. Repeated CLI invocations produce byte-identical output.
void criterion_cli_determinism() {
#ifndef WQF_CLI_PATH
  report(false, "9. CLI determinism (CLI path not configured)");
#else
  const std::filesystem::path tmp = std::filesystem::temp_directory_path();
  const std::vector<std::string> commands = {
      "moment-convergence --runs 2 --grid 1,10,100,1000",
      "sgd-compare --n 6 --iters 5000",
      "moment-check --runs 3",
  };
  bool ok = true;
  std::string detail;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    const std::filesystem::path f1 = tmp / ("wqf_accept_" + std::to_string(c) + "_a.out");
    const std::filesystem::path f2 = tmp / ("wqf_accept_" + std::to_string(c) + "_b.out");
    for (const std::filesystem::path& f : {f1, f2}) {
      const std::string cmd =
          std::string(WQF_CLI_PATH) + " " + commands[c] + " --out " + f.string();
      if (std::system(cmd.c_str()) != 0) {
        ok = false;
        detail = "exit status nonzero for '" + commands[c] + "'";
      }
    }
    if (ok && read_file(f1) != read_file(f2)) {
      ok = false;
      detail = "outputs differ for '" + commands[c] + "'";
    }
    std::error_code ec;
    std::filesystem::remove(f1, ec);
    std::filesystem::remove(f2, ec);
    if (!ok) {
      break;
    }
  }
  report(ok, "9. repeated CLI invocations are byte-identical" +
                 (detail.empty() ? std::string(" (3 commands, 2 runs each)") : " (" + detail + ")"));
#endif
}

}  // namespace

int main(int argc, char** argv) {
  bool run_long = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--long") {
      run_long = true;
    }
  }

  criterion_paths();
  criterion_anchor();
  criterion_convergence(run_long);
  criterion_mean_law();
  criterion_transform_law();
  criterion_noise();
  criterion_averaging();
  criterion_finite_difference();
  criterion_cli_determinism();

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
