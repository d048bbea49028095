#include "wqf/quadmodel.hpp"

#include <stdexcept>
#include <utility>

#include <Eigen/SVD>

#include "wqf/wishart.hpp"

namespace wqf {

QuadraticModel::QuadraticModel(MatrixXd a, SpdMatrix scale)
    : a_(std::move(a)), scale_(std::move(scale)) {
  if (a_.rows() != a_.cols()) {
    throw std::invalid_argument("QuadraticModel: A must be square");
  }
  if (a_.rows() != scale_.dim()) {
    throw std::invalid_argument("QuadraticModel: A and the scale matrix disagree in dimension");
  }
  const Eigen::JacobiSVD<MatrixXd> svd(a_);
  const VectorXd& sv = svd.singularValues();
  if (!(sv(sv.size() - 1) > 1e-12 * sv(0))) {
    throw std::invalid_argument("QuadraticModel: A must be invertible");
  }
  hessian_ = symmetrize(a_ * scale_.mat() * a_.transpose());
}

StochasticDraw sample_function(const QuadraticModel& model, Rng& rng) {
  const VectorXd r = sample_gaussian_vector(model.scale(), rng);
  const VectorXd b = sample_gaussian_vector(model.scale(), rng);
  return StochasticDraw{model.a_mat() * r, b};
}

VectorXd stochastic_gradient(const QuadraticModel& model, const StochasticDraw& draw,
                             const VectorXd& x) {
  if (x.size() != model.dim()) {
    throw std::invalid_argument("stochastic_gradient: x has the wrong dimension");
  }
  return draw.a_vec * draw.a_vec.dot(x) + draw.b_vec;
}

VectorXd true_gradient(const QuadraticModel& model, const VectorXd& x) {
  if (x.size() != model.dim()) {
    throw std::invalid_argument("true_gradient: x has the wrong dimension");
  }
  return model.hessian() * x;
}

VectorXd noise(const QuadraticModel& model, const StochasticDraw& draw, const VectorXd& x) {
  return stochastic_gradient(model, draw, x) - true_gradient(model, x);
}

NoiseMoments noise_covariance(const QuadraticModel& model, const VectorXd& x) {
  if (x.size() != model.dim()) {
    throw std::invalid_argument("noise_covariance: x has the wrong dimension");
  }
  const int n = model.dim();
  const MatrixXd& a = model.a_mat();
  const MatrixXd& sigma = model.scale().mat();

  NoiseMoments out;
  out.mean = VectorXd::Zero(n);
  if (x.isZero(0.0)) {
    // Every x-dependent term vanishes identically; return Sigma untouched.
    out.cov = sigma;
    return out;
  }

  const VectorXd atx = a.transpose() * x;
  const SymmetricMatrix b = SymmetricMatrix::Symmetrized(atx * atx.transpose());
  const WishartParams params(model.scale(), 1);
  const MatrixXd e_qbq = expected_qbq_special(params, b, SpecialCase::k_one).value;
  const MatrixXd cov =
      a * e_qbq * a.transpose() + sigma - a * (sigma * b.mat() * sigma) * a.transpose();
  out.cov = symmetrize(cov);
  return out;
}

}  // namespace wqf
