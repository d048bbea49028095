#pragma once

#include <vector>

#include "wqf/rng.hpp"
#include "wqf/wishart.hpp"

namespace wqf {

// How a moment value was obtained. The three closed-form paths are
// algebraically identical; empirical marks a Monte Carlo estimate.
enum class MomentPath { algebraic, eigen, kronecker, empirical };

// E(QBQ) (or an estimate of it) together with its computation path.
struct MomentResult {
  MatrixXd value;  // symmetric n x n
  MomentPath path;
};

// Simplified closed forms available under extra assumptions.
enum class SpecialCase {
  k_one,                  // dof == 1
  sigma_scalar_identity,  // dof == 1 and scale == sigma^2 * I
};

// Dimension cap of the Kronecker path (its intermediate is n^2 x n^2).
inline constexpr int kKroneckerDimCap = 50;

// E(QBQ) = k tr(B Sigma) Sigma + (k^2 + k) Sigma B Sigma
// for Q ~ W_n(Sigma, k) and symmetric B.
MomentResult expected_qbq(const WishartParams& params, const SymmetricMatrix& b);

// Same expectation through the eigendecomposition Sigma = U D U^T:
//   k U [ 2 (d d^T) o (U^T B U) + tr(U^T B U D) D ] U^T + (k^2 - k) Sigma B Sigma
// with d = diag(D) and o the Hadamard product.
MomentResult expected_qbq_eigen(const WishartParams& params, const SymmetricMatrix& b);

// Same expectation through the second Kronecker moment
//   E(Q (x) Q) = k^2 Sigma (x) Sigma + k vec(Sigma) vec(Sigma)^T
//              + k K_{n,n} (Sigma (x) Sigma),
// built explicitly and applied to vec(B). Validation path: throws
// SizeCapError when n exceeds max_dim.
MomentResult expected_qbq_kronecker(const WishartParams& params, const SymmetricMatrix& b,
                                    int max_dim = kKroneckerDimCap);

// E(Q^2) = (k^2 + k) Sigma^2 + k tr(Sigma) Sigma; equals expected_qbq with B = I.
MomentResult second_moment(const WishartParams& params);

// Simplified formulas:
//   k_one:                 tr(B Sigma) Sigma + 2 Sigma B Sigma
//   sigma_scalar_identity: sigma^4 [ 2 B + tr(B) I ]
// Throws CaseMismatchError when the requested case's preconditions fail
// (scalar-identity detection at 1e-12 relative tolerance).
MomentResult expected_qbq_special(const WishartParams& params, const SymmetricMatrix& b,
                                  SpecialCase special);

// Monte Carlo estimate (1/m) sum_i Q_i B Q_i over m independent Wishart
// samples. The running sum is accumulated in extended precision and divided
// once at the end. Deterministic given the rng state.
MomentResult empirical_qbq(const WishartParams& params, const SymmetricMatrix& b,
                           long samples, Rng& rng);

// Estimates at every count in `grid` (strictly increasing) from one growing
// sample stream, so the estimate at grid[i+1] extends the samples of grid[i].
std::vector<MomentResult> empirical_qbq_grid(const WishartParams& params,
                                             const SymmetricMatrix& b,
                                             const std::vector<long>& grid, Rng& rng);

// Permutation matrix K with K vec(M) == vec(M^T) for every n x n M.
struct CommutationMatrix {
  int n;
  MatrixXd entries;  // n^2 x n^2
};

CommutationMatrix build_commutation(int n);

}  // namespace wqf
