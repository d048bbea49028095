#pragma once

#include "wqf/linalg.hpp"
#include "wqf/rng.hpp"

namespace wqf {

// Matrix with i.i.d. standard normal entries, filled column by column.
MatrixXd random_gaussian(int rows, int cols, Rng& rng);

// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the sign
// convention that makes the factor unique).
MatrixXd random_orthogonal(int n, Rng& rng);

// (M + M^T)/2 for M with i.i.d. N(0,1) entries. Exactly symmetric;
// off-diagonal entries have variance 1/2, diagonal entries variance 1.
SymmetricMatrix random_symmetric(int n, Rng& rng);

// G G^T + 1e-6*n*I for Gaussian G. The ridge keeps the smallest eigenvalue
// away from zero, so the result is unconditionally positive definite.
SpdMatrix random_spd(int n, Rng& rng);

// Symmetric PSD matrix with largest eigenvalue `norm`, smallest eigenvalue
// norm/cond, the remaining eigenvalues uniform in [norm/cond, norm], and a
// random orthogonal eigenbasis. Requires n >= 2, norm > 0, cond >= 1.
SymmetricMatrix random_constrained_psd(int n, double norm, double cond, Rng& rng);

struct EigenDecomposition {
  MatrixXd u;  // orthogonal, columns ordered to match d
  VectorXd d;  // eigenvalues, descending
};

// Full symmetric eigendecomposition m = u * Diag(d) * u^T with d sorted
// descending. Throws NumericalError if the solver does not converge.
EigenDecomposition eigendecompose(const SymmetricMatrix& m);

}  // namespace wqf
