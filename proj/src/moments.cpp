#include "wqf/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wqf/errors.hpp"

namespace wqf {

namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

void require_same_dim(const WishartParams& params, const SymmetricMatrix& b) {
  if (params.dim() != b.dim()) {
    throw std::invalid_argument("moment computation: B and the scale matrix disagree in dimension");
  }
}

double trace_product(const MatrixXd& b, const MatrixXd& sigma) {
  // tr(B Sigma) = sum(B o Sigma) for symmetric Sigma.
  return b.cwiseProduct(sigma).sum();
}

}  // namespace

MomentResult expected_qbq(const WishartParams& params, const SymmetricMatrix& b) {
  require_same_dim(params, b);
  const MatrixXd& sigma = params.scale().mat();
  const double k = params.dof();
  const MatrixXd value =
      k * trace_product(b.mat(), sigma) * sigma + (k * k + k) * (sigma * b.mat() * sigma);
  return MomentResult{symmetrize(value), MomentPath::algebraic};
}

MomentResult expected_qbq_eigen(const WishartParams& params, const SymmetricMatrix& b) {
  require_same_dim(params, b);
  const SpdMatrix& scale = params.scale();
  const MatrixXd& sigma = scale.mat();
  const MatrixXd& u = scale.eigenvectors();
  const VectorXd& d = scale.eigenvalues();
  const double k = params.dof();

  const MatrixXd b_tilde = u.transpose() * b.mat() * u;
  const double trace_bd = b_tilde.diagonal().dot(d);
  MatrixXd core = 2.0 * (d * d.transpose()).cwiseProduct(b_tilde);
  core += trace_bd * MatrixXd(d.asDiagonal());

  const MatrixXd value =
      k * (u * core * u.transpose()) + (k * k - k) * (sigma * b.mat() * sigma);
  return MomentResult{symmetrize(value), MomentPath::eigen};
}

MomentResult expected_qbq_kronecker(const WishartParams& params, const SymmetricMatrix& b,
                                    int max_dim) {
  require_same_dim(params, b);
  const int n = params.dim();
  if (n > max_dim) {
    throw SizeCapError("expected_qbq_kronecker: dimension " + std::to_string(n) +
                       " exceeds the cap " + std::to_string(max_dim));
  }
  const MatrixXd& sigma = params.scale().mat();
  const double k = params.dof();

  const MatrixXd sig_kron = kron(sigma, sigma);
  const VectorXd vec_sigma = vec(sigma);

  // E(Q (x) Q), assembled explicitly. The commutation term K (Sigma (x) Sigma)
  // is a row permutation of the Kronecker product: row c*n+r of K M is row
  // r*n+c of M.
  MatrixXd second_kron = (k * k) * sig_kron + k * (vec_sigma * vec_sigma.transpose());
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      second_kron.row(c * n + r) += k * sig_kron.row(r * n + c);
    }
  }

  const VectorXd value = second_kron * vec(b.mat());
  return MomentResult{symmetrize(unvec(value, n, n)), MomentPath::kronecker};
}

MomentResult second_moment(const WishartParams& params) {
  const MatrixXd& sigma = params.scale().mat();
  const double k = params.dof();
  const MatrixXd value = (k * k + k) * (sigma * sigma) + k * sigma.trace() * sigma;
  return MomentResult{symmetrize(value), MomentPath::algebraic};
}

MomentResult expected_qbq_special(const WishartParams& params, const SymmetricMatrix& b,
                                  SpecialCase special) {
  require_same_dim(params, b);
  const MatrixXd& sigma = params.scale().mat();
  const int n = params.dim();

  // Both simplifications are dof = 1 reductions of the general formula.
  if (params.dof() != 1) {
    throw CaseMismatchError("expected_qbq_special: requires dof == 1");
  }

  switch (special) {
    case SpecialCase::k_one: {
      const MatrixXd value =
          trace_product(b.mat(), sigma) * sigma + 2.0 * (sigma * b.mat() * sigma);
      return MomentResult{symmetrize(value), MomentPath::algebraic};
    }
    case SpecialCase::sigma_scalar_identity: {
      const double sigma_sq = sigma.trace() / n;
      const MatrixXd scaled_identity = sigma_sq * MatrixXd::Identity(n, n);
      if (frobenius_rel_error(sigma, scaled_identity) > 1e-12) {
        throw CaseMismatchError(
            "expected_qbq_special: scale matrix is not a multiple of the identity");
      }
      const MatrixXd value =
          sigma_sq * sigma_sq * (2.0 * b.mat() + b.mat().trace() * MatrixXd::Identity(n, n));
      return MomentResult{symmetrize(value), MomentPath::algebraic};
    }
  }
  throw std::invalid_argument("expected_qbq_special: unknown case");
}

MomentResult empirical_qbq(const WishartParams& params, const SymmetricMatrix& b,
                           long samples, Rng& rng) {
  if (samples < 1) {
    throw std::invalid_argument("empirical_qbq: sample count must be >= 1");
  }
  return empirical_qbq_grid(params, b, {samples}, rng).front();
}

std::vector<MomentResult> empirical_qbq_grid(const WishartParams& params,
                                             const SymmetricMatrix& b,
                                             const std::vector<long>& grid, Rng& rng) {
  require_same_dim(params, b);
  if (grid.empty()) {
    throw std::invalid_argument("empirical_qbq_grid: grid must not be empty");
  }
  long previous = 0;
  for (long m : grid) {
    if (m <= previous) {
      throw std::invalid_argument("empirical_qbq_grid: grid must be strictly increasing and >= 1");
    }
    previous = m;
  }

  const int n = params.dim();
  // Running sum in extended precision: a million-term sum of O(1e4) entries
  // sheds digits when accumulated at working precision.
  MatrixXld acc = MatrixXld::Zero(n, n);
  std::vector<MomentResult> results;
  results.reserve(grid.size());

  long count = 0;
  for (long target : grid) {
    for (; count < target; ++count) {
      const WishartSample sample = sample_wishart(params, rng);
      const MatrixXd qbq = sample.q * b.mat() * sample.q;
      acc += qbq.cast<long double>();
    }
    const MatrixXd mean = (acc / static_cast<long double>(count)).cast<double>();
    results.push_back(MomentResult{symmetrize(mean), MomentPath::empirical});
  }
  return results;
}

CommutationMatrix build_commutation(int n) {
  if (n < 1) {
    throw std::invalid_argument("build_commutation: dimension must be >= 1");
  }
  MatrixXd k = MatrixXd::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  // vec(M^T)[c*n + r] = M(c, r) = vec(M)[r*n + c].
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      k(c * n + r, r * n + c) = 1.0;
    }
  }
  return CommutationMatrix{n, std::move(k)};
}

}  // namespace wqf
