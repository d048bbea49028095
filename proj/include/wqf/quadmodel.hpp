#pragma once

#include "wqf/linalg.hpp"
#include "wqf/moments.hpp"
#include "wqf/rng.hpp"

namespace wqf {

// Family of random quadratic functions
//   f_l(x) = 1/2 ((a_l^T x))^2 + b_l^T x,   a_l = A r_l,   r_l, b_l ~ N_n(0, Sigma),
// whose expectation is the fixed objective f(x) = 1/2 x^T A Sigma A^T x.
class QuadraticModel {
 public:
  // Requires square invertible a (smallest singular value > 1e-12 times the
  // largest) matching the scale dimension; throws std::invalid_argument.
  QuadraticModel(MatrixXd a, SpdMatrix scale);

  int dim() const { return scale_.dim(); }
  const MatrixXd& a_mat() const { return a_; }
  const SpdMatrix& scale() const { return scale_; }

  // A Sigma A^T, the Hessian of the limit objective. Symmetric PSD.
  const MatrixXd& hessian() const { return hessian_; }

 private:
  MatrixXd a_;
  SpdMatrix scale_;
  MatrixXd hessian_;
};

// One sampled function, reduced to the two vectors that define it.
struct StochasticDraw {
  VectorXd a_vec;  // A r
  VectorXd b_vec;
};

// Exact moments of the gradient noise at a fixed point.
struct NoiseMoments {
  VectorXd mean;  // identically zero
  MatrixXd cov;
};

// Draws r and b (in that order) from N_n(0, Sigma) and returns (A r, b).
StochasticDraw sample_function(const QuadraticModel& model, Rng& rng);

// Gradient of the sampled function: a (a^T x) + b.
VectorXd stochastic_gradient(const QuadraticModel& model, const StochasticDraw& draw,
                             const VectorXd& x);

// Gradient of the limit objective: A Sigma A^T x.
VectorXd true_gradient(const QuadraticModel& model, const VectorXd& x);

// Gradient noise: stochastic_gradient - true_gradient. Zero mean.
VectorXd noise(const QuadraticModel& model, const StochasticDraw& draw, const VectorXd& x);

// Exact noise moments at x. With B = A^T x x^T A and Q ~ W_n(Sigma, 1):
//   Cov = A E(QBQ) A^T + Sigma - A Sigma B Sigma A^T,
// where E(QBQ) uses the dof = 1 closed form. At x = 0 the covariance is
// exactly the scale matrix.
NoiseMoments noise_covariance(const QuadraticModel& model, const VectorXd& x);

}  // namespace wqf
