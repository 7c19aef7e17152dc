#pragma once

#include <vector>

#include "cohdisc/types.hpp"

namespace cohdisc {

// Eigendecomposition of a Hermitian matrix.
struct Spectrum {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // column k pairs with eigenvalues[k]
};

bool is_hermitian(const Matrix& m, double tolerance = tol::herm);

// Fixes the global phase of v so that its largest-magnitude component (first
// index on ties) is real and nonnegative.
void fix_phase(Vector& v);

// Hermitian eigendecomposition, eigenvalues ascending, eigenvectors
// orthonormal with the fix_phase convention applied per column.
Spectrum eigh(const Matrix& h);

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [-tol::psd, 0) are clipped to zero; anything lower throws.
Matrix matrix_sqrt(const Matrix& p);

// Sum of singular values.
double trace_norm(const Matrix& m);

// Uhlmann fidelity (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2, in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Unitary factor of the polar decomposition m = U |m|.  For singular m the
// factor is completed through the SVD: m = W S V* gives U = W V*, with the
// null-space columns fixed by the decomposition.  Deterministic for a fixed
// build.
Matrix polar_unitary(const Matrix& m);

// Gram matrix G(i,j) = <s_i|s_j>.
Matrix gram(const std::vector<StateVector>& states);

struct RankInfo {
  bool independent;
  Index rank;
};

// Numerical rank of the span: Gram eigenvalues above rank_tolerance times the
// largest count.  Empty input is vacuously independent with rank 0.
RankInfo linear_independence(const std::vector<StateVector>& states,
                             double rank_tolerance = tol::rank);

// Extends orthonormal columns to a dim x dim unitary; the input columns are
// preserved exactly as the leading columns.
Matrix complete_basis(const Matrix& columns, Index dim);

}  // namespace cohdisc
