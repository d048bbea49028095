#include "wqf/linalg.hpp"

#include <stdexcept>

#include "wqf/errors.hpp"

namespace wqf {

namespace {

constexpr double kDecompositionTol = 1e-12;

void require_square(const MatrixXd& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
  }
}

}  // namespace

MatrixXd symmetrize(const MatrixXd& m) {
  require_square(m, "symmetrize");
  return (m + m.transpose()) / 2.0;
}

bool is_exactly_symmetric(const MatrixXd& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

SymmetricMatrix::SymmetricMatrix(MatrixXd entries) : entries_(std::move(entries)) {
  require_square(entries_, "SymmetricMatrix");
  if (!is_exactly_symmetric(entries_)) {
    throw std::invalid_argument("SymmetricMatrix: entries are not exactly symmetric");
  }
}

SymmetricMatrix SymmetricMatrix::Symmetrized(const MatrixXd& m) {
  return SymmetricMatrix(symmetrize(m));
}

SpdMatrix::SpdMatrix(const MatrixXd& entries) : entries_(entries) {
  require_square(entries_, "SpdMatrix");
  if (!is_exactly_symmetric(entries_)) {
    throw std::invalid_argument("SpdMatrix: entries are not exactly symmetric");
  }

  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(entries_);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("SpdMatrix: eigendecomposition failed to converge");
  }
  // Solver order is ascending; flip to descending.
  eig_d_ = solver.eigenvalues().reverse();
  eig_u_ = solver.eigenvectors().rowwise().reverse();

  const int n = dim();
  if (eig_d_(n - 1) <= 0.0) {
    throw std::invalid_argument("SpdMatrix: matrix is not positive definite");
  }

  const MatrixXd reconstructed = eig_u_ * eig_d_.asDiagonal() * eig_u_.transpose();
  if (frobenius_rel_error(reconstructed, entries_) > kDecompositionTol) {
    throw NumericalError("SpdMatrix: eigendecomposition does not reconstruct the input");
  }
  if ((eig_u_.transpose() * eig_u_ - MatrixXd::Identity(n, n)).norm() > kDecompositionTol) {
    throw NumericalError("SpdMatrix: eigenvector basis is not orthogonal");
  }

  Eigen::LLT<MatrixXd> llt(entries_);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("SpdMatrix: Cholesky factorization failed");
  }
  chol_lower_ = llt.matrixL();
}

VectorXd vec(const MatrixXd& m) {
  return Eigen::Map<const VectorXd>(m.data(), m.size());
}

MatrixXd unvec(const VectorXd& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw std::invalid_argument("unvec: length does not match the target shape");
  }
  return Eigen::Map<const MatrixXd>(v.data(), rows, cols);
}

MatrixXd kron(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double spectral_norm(const MatrixXd& m) {
  Eigen::JacobiSVD<MatrixXd> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

double frobenius_rel_error(const MatrixXd& approx, const MatrixXd& exact) {
  const double denom = exact.norm();
  const double num = (approx - exact).norm();
  return denom > 0.0 ? num / denom : num;
}

double spectral_rel_error(const MatrixXd& approx, const MatrixXd& exact) {
  const double denom = spectral_norm(exact);
  const double num = spectral_norm(approx - exact);
  return denom > 0.0 ? num / denom : num;
}

}  // namespace wqf
