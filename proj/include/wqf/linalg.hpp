#pragma once

#include <Eigen/Dense>

namespace wqf {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// (m + m^T)/2. IEEE addition is commutative, so entries (i,j) and (j,i) of
// the result are bitwise equal and an already exactly symmetric input is
// returned unchanged.
MatrixXd symmetrize(const MatrixXd& m);

// True iff m(i,j) == m(j,i) holds bitwise for every pair.
bool is_exactly_symmetric(const MatrixXd& m);

// Square real matrix with exact entrywise symmetry, checked at construction.
class SymmetricMatrix {
 public:
  // Throws std::invalid_argument unless entries is square, non-empty and
  // exactly symmetric.
  explicit SymmetricMatrix(MatrixXd entries);

  // Builds from a nearly symmetric matrix by averaging m with its transpose.
  static SymmetricMatrix Symmetrized(const MatrixXd& m);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const MatrixXd& mat() const { return entries_; }

 private:
  MatrixXd entries_;
};

// Symmetric positive definite matrix with a cached eigendecomposition
//   mat() == eigenvectors() * eigenvalues().asDiagonal() * eigenvectors()^T
// (eigenvalues sorted descending, all strictly positive) and a cached lower
// Cholesky factor. Immutable after construction.
class SpdMatrix {
 public:
  // Throws std::invalid_argument if entries is not exactly symmetric or not
  // positive definite; NumericalError if the decomposition fails or does not
  // reconstruct the input to 1e-12 relative Frobenius accuracy.
  explicit SpdMatrix(const MatrixXd& entries);
  explicit SpdMatrix(const SymmetricMatrix& m) : SpdMatrix(m.mat()) {}

  int dim() const { return static_cast<int>(entries_.rows()); }
  const MatrixXd& mat() const { return entries_; }

  // Orthogonal U, columns ordered by descending eigenvalue.
  const MatrixXd& eigenvectors() const { return eig_u_; }

  // Eigenvalues in descending order, all > 0.
  const VectorXd& eigenvalues() const { return eig_d_; }

  // Lower-triangular L with L L^T == mat().
  const MatrixXd& chol_lower() const { return chol_lower_; }

 private:
  MatrixXd entries_;
  MatrixXd eig_u_;
  VectorXd eig_d_;
  MatrixXd chol_lower_;
};

// Column-stacking of m into a vector of length rows*cols.
VectorXd vec(const MatrixXd& m);

// Inverse of vec for a known target shape.
MatrixXd unvec(const VectorXd& v, int rows, int cols);

// Kronecker product a (x) b.
MatrixXd kron(const MatrixXd& a, const MatrixXd& b);

// Largest singular value.
double spectral_norm(const MatrixXd& m);

// ||approx - exact||_F / ||exact||_F; falls back to the absolute error when
// exact is the zero matrix.
double frobenius_rel_error(const MatrixXd& approx, const MatrixXd& exact);

// Same with the spectral norm.
double spectral_rel_error(const MatrixXd& approx, const MatrixXd& exact);

}  // namespace wqf
