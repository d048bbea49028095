#include "wqf/matgen.hpp"

#include <stdexcept>

#include "wqf/errors.hpp"

namespace wqf {

namespace {

void require_dim(int n, int min, const char* who) {
  if (n < min) {
    throw std::invalid_argument(std::string(who) + ": dimension must be at least " +
                                std::to_string(min));
  }
}

}  // namespace

MatrixXd random_gaussian(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("random_gaussian: dimensions must be positive");
  }
  MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      m(i, j) = rng.normal();
    }
  }
  return m;
}

MatrixXd random_orthogonal(int n, Rng& rng) {
  require_dim(n, 1, "random_orthogonal");
  const MatrixXd g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<MatrixXd> qr(g);
  MatrixXd q = qr.householderQ();
  // Fixing the signs of R's diagonal makes the factor Haar-distributed.
  const VectorXd r_diag = qr.matrixQR().diagonal();
  for (int j = 0; j < n; ++j) {
    if (r_diag(j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

SymmetricMatrix random_symmetric(int n, Rng& rng) {
  require_dim(n, 1, "random_symmetric");
  return SymmetricMatrix(symmetrize(random_gaussian(n, n, rng)));
}

SpdMatrix random_spd(int n, Rng& rng) {
  require_dim(n, 1, "random_spd");
  const MatrixXd g = random_gaussian(n, n, rng);
  MatrixXd s = g * g.transpose();
  s += 1e-6 * n * MatrixXd::Identity(n, n);
  return SpdMatrix(symmetrize(s));
}

SymmetricMatrix random_constrained_psd(int n, double norm, double cond, Rng& rng) {
  require_dim(n, 2, "random_constrained_psd");
  if (!(norm > 0.0)) {
    throw std::invalid_argument("random_constrained_psd: norm must be positive");
  }
  if (!(cond >= 1.0)) {
    throw std::invalid_argument("random_constrained_psd: condition number must be >= 1");
  }

  const double lo = norm / cond;
  VectorXd lambda(n);
  lambda(0) = norm;
  lambda(n - 1) = lo;
  for (int i = 1; i < n - 1; ++i) {
    lambda(i) = lo + rng.uniform() * (norm - lo);
  }

  const MatrixXd q = random_orthogonal(n, rng);
  return SymmetricMatrix(symmetrize(q * lambda.asDiagonal() * q.transpose()));
}

EigenDecomposition eigendecompose(const SymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(m.mat());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecompose: solver failed to converge");
  }
  return EigenDecomposition{solver.eigenvectors().rowwise().reverse(),
                            solver.eigenvalues().reverse()};
}

}  // namespace wqf
