#pragma once

#include <vector>

#include "wqf/linalg.hpp"
#include "wqf/rng.hpp"

namespace wqf {

// Scale matrix and degrees of freedom of a W_n(scale, dof) distribution.
class WishartParams {
 public:
  // Throws std::invalid_argument if dof < 1.
  WishartParams(SpdMatrix scale, int dof);

  const SpdMatrix& scale() const { return scale_; }
  int dof() const { return dof_; }
  int dim() const { return scale_.dim(); }

 private:
  SpdMatrix scale_;
  int dof_;
};

// One realization Q = sum_l r_l r_l^T. q is exactly symmetric as computed;
// draws holds the underlying Gaussian vectors only when requested.
struct WishartSample {
  MatrixXd q;
  std::vector<VectorXd> draws;
};

// One draw from N_n(0, scale), generated as L z with the cached Cholesky
// factor L of the scale matrix and i.i.d. standard normal z.
VectorXd sample_gaussian_vector(const SpdMatrix& scale, Rng& rng);

// One draw from W_n(scale, dof). retain_draws keeps the dof underlying
// Gaussian vectors (off by default: they are dead weight in moment
// estimation loops with millions of samples).
WishartSample sample_wishart(const WishartParams& params, Rng& rng,
                             bool retain_draws = false);

// c^T q c for an n x m matrix c of full column rank; the result is a
// W_m(c^T scale c, dof) realization. Throws std::invalid_argument when c is
// rank deficient (smallest singular value <= 1e-10 times the largest).
MatrixXd transform_sample(const WishartSample& sample, const MatrixXd& c);

}  // namespace wqf
