#include "wqf/wishart.hpp"

#include <stdexcept>

namespace wqf {

WishartParams::WishartParams(SpdMatrix scale, int dof)
    : scale_(std::move(scale)), dof_(dof) {
  if (dof_ < 1) {
    throw std::invalid_argument("WishartParams: degrees of freedom must be >= 1");
  }
}

VectorXd sample_gaussian_vector(const SpdMatrix& scale, Rng& rng) {
  const int n = scale.dim();
  VectorXd z(n);
  for (int i = 0; i < n; ++i) z(i) = rng.normal();
  return scale.chol_lower() * z;
}

WishartSample sample_wishart(const WishartParams& params, Rng& rng, bool retain_draws) {
  const int n = params.dim();
  WishartSample sample;
  sample.q = MatrixXd::Zero(n, n);
  if (retain_draws) sample.draws.reserve(params.dof());
  for (int l = 0; l < params.dof(); ++l) {
    VectorXd r = sample_gaussian_vector(params.scale(), rng);
    // Outer products keep q exactly symmetric: entry (i,j) and (j,i) are the
    // same product accumulated in the same order.
    sample.q.noalias() += r * r.transpose();
    if (retain_draws) sample.draws.push_back(std::move(r));
  }
  return sample;
}

MatrixXd transform_sample(const WishartSample& sample, const MatrixXd& c) {
  if (c.rows() != sample.q.rows()) {
    throw std::invalid_argument("transform_sample: row count does not match the sample");
  }
  if (c.cols() < 1) {
    throw std::invalid_argument("transform_sample: c must have at least one column");
  }
  Eigen::JacobiSVD<MatrixXd> svd(c);
  const VectorXd& sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(sv.size() - 1);
  if (c.cols() > c.rows() || !(smallest > 1e-10 * largest)) {
    throw std::invalid_argument("transform_sample: c is rank deficient");
  }
  return c.transpose() * sample.q * c;
}

}  // namespace wqf
