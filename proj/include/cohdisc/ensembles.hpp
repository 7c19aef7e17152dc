#pragma once

#include <vector>

#include "cohdisc/matcore.hpp"
#include "cohdisc/types.hpp"

namespace cohdisc {

// Pure-state ensemble: priors nonnegative summing to 1 within tol::trace,
// states all of the same dimension.
class PureEnsemble {
 public:
  PureEnsemble(RealVector priors, std::vector<StateVector> states);
  const RealVector& priors() const { return priors_; }
  const std::vector<StateVector>& states() const { return states_; }
  Index size() const { return static_cast<Index>(states_.size()); }
  Index dim() const { return states_.front().dim(); }

 private:
  RealVector priors_;
  std::vector<StateVector> states_;
};

// The discrimination problem's density operator: matrix(i,j) =
// sqrt(eta_i eta_j) <psi_i|psi_j>.  Positive semidefinite by construction,
// diagonal equal to the priors.
struct QSDState {
  DensityMatrix matrix;
  Matrix source_gram;
  RealVector source_priors;
};

QSDState qsd_state(const PureEnsemble& e);

// Ensemble induced by a density operator: eta_i = rho_ii and
// psi_i = sqrt(rho) e_i / sqrt(eta_i).  Indices with eta_i <= tol::zero_prior
// are dropped; source_indices maps surviving positions back to basis indices.
struct InducedEnsemble {
  PureEnsemble ensemble;
  std::vector<Index> source_indices;
};

InducedEnsemble induced_ensemble_indexed(const DensityMatrix& rho);
PureEnsemble induced_ensemble(const DensityMatrix& rho);

// Unitary mapping one family onto another with the same Gram matrix:
// ||a_i - U b_i|| <= tol::align for all i.  With conjugate_b set, b is
// conjugated entrywise first (for families whose Gram equals the conjugate).
// Throws GramMismatch when the Grams disagree or the residual cannot be met.
Matrix align_unitary(const std::vector<StateVector>& a,
                     const std::vector<StateVector>& b,
                     bool conjugate_b = false);

// QSD-state of the ensemble {psi_i^(x)n, eta_i}: the Gram entries are raised
// to the n-th power entrywise.  copies == 1 reproduces qsd_state.
QSDState multicopy_qsd_state(const PureEnsemble& e, int copies);

// Zero-pads a state to a larger dimension.
StateVector pad_state(const StateVector& s, Index dim);

// Zero-pads every state of an ensemble to a larger dimension.
PureEnsemble pad_ensemble(const PureEnsemble& e, Index dim);

}  // namespace cohdisc
