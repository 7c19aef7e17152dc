#pragma once

#include "cohdisc/coherence.hpp"
#include "cohdisc/discrimination.hpp"
#include "cohdisc/ensembles.hpp"
#include "cohdisc/types.hpp"

namespace cohdisc {

// Optimal measurement recovered through the density-operator detour: solve the
// coherence problem on the QSD state, then carry the measurement back to the
// ensemble's space with the aligning unitary.
struct RecoveryResult {
  double success;                      // achieved on the input ensemble
  VonNeumannMeasurement measurement;   // dim d, outcome i answers state i
  Matrix alignment;                    // unitary taking induced states to inputs
  RealVector certificate;             // eta_i |<f_i|psi_i>|^2, sums to success
  double qsd_coherence;               // coherence of the handoff state
  double consistency;                 // |success - (1 - qsd_coherence)|
  int iterations;
  int restarts_used;
};

// Requires a linearly independent ensemble (DependentEnsemble otherwise) with
// strictly positive priors (InvalidEnsemble otherwise): every state has to
// survive the round trip through the density operator.
RecoveryResult recover_optimal_measurement(const PureEnsemble& e,
                                           const SearchConfig& config = {});

// Independent re-derivation of everything a RecoveryResult claims.  Never
// throws; a dependent ensemble short-circuits to an all-false report.
struct RecoveryVerification {
  bool independent = false;
  bool success_consistent = false;         // success re-evaluates to the same value
  bool measurement_orthonormal = false;
  bool error_equals_qsd_coherence = false;  // 1 - success matches c_g of the QSD state
  bool qsd_matches_ensemble = false;        // induced ensemble round-trips the Gram
  bool alignment_unitary = false;           // U is unitary and maps as promised
  bool ok = false;
  double worst_residual = 0.0;
};

RecoveryVerification verify_recovery(const PureEnsemble& e, const RecoveryResult& r);

}  // namespace cohdisc
