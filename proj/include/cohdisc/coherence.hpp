#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohdisc/discrimination.hpp"
#include "cohdisc/types.hpp"

namespace cohdisc {

// Sum of off-diagonal magnitudes.
double c_l1(const DensityMatrix& rho);

// Off-diagonal support as an involution: pairing[i] is the single column that
// row i couples to, or i itself when the row is diagonal.
struct XBlockStructure {
  std::vector<Index> pairing;
};

// A state is "generalized X" when every row has at most one off-diagonal
// entry above tol::x_pattern.  Returns the pairing, or nothing.
std::optional<XBlockStructure> detect_generalized_x(const DensityMatrix& rho);

struct MeasurementSolverResult {
  double f_value;                   // best found max_sigma fidelity(rho, sigma)
  VonNeumannMeasurement measurement;  // vector i targets basis index i of rho
  int iterations;
  int restarts_used;
};

// Maximal fidelity with the incoherent set, optimized over measurements: runs
// optimal_vn_search on the induced ensemble and reorders the basis back to the
// original index positions (dropped zero-prior indices get completion vectors).
MeasurementSolverResult solver_measurement_space(const DensityMatrix& rho,
                                                 const SearchConfig& config = {});

struct StateSolverResult {
  double f_value;       // fidelity(rho, diag(weights))
  RealVector weights;   // diagonal of the incoherent candidate
  int iterations;
  bool converged;
};

// Same maximum optimized over diagonal states: alternates an exact trace-norm
// evaluation at fixed weights with the closed-form reweighting
// mu_i ~ |<f_i|sqrt(rho)|e_i>|^2.  Both half-steps are exact coordinate
// maximizations, so the objective is non-decreasing.
StateSolverResult solver_state_space(const DensityMatrix& rho,
                                     int max_iters = 500, double tol_opt = 1e-12);

// sigma_ii = |<f_i|sqrt(rho)|e_i>|^2 / F.  With the optimizing measurement
// this is the closest incoherent state: fidelity(rho, sigma) = 1 - c_g.
DensityMatrix closest_incoherent_state(const DensityMatrix& rho,
                                       const VonNeumannMeasurement& m);

// Upper bounds on the geometric coherence, cheapest first:
//   l1: 1 - max_i rho_ii
//   l2: 1 - sum_i sqrt(rho)_ii^2
//   l3: error of the greedy orthogonalization measurement on the induced ensemble
//   l4: c_l1 / (d - 1), valid only when the induced ensemble is linearly
//       independent (absent otherwise).
struct CoherenceBounds {
  double l1;
  double l2;
  double l3;
  std::optional<double> l4;
};

CoherenceBounds bounds(const DensityMatrix& rho);

struct CoherenceConfig {
  SearchConfig search;
  bool force_numerical = false;  // skip the closed-form dispatch (cross-checks)
};

struct CoherenceReport {
  double c_g;
  DensityMatrix cis;       // closest incoherent (diagonal) state
  std::string method_tag;  // qubit_closed_form | x_block | numerical
  CoherenceBounds bounds;
  double solver_gap;       // numerical path: |measurement-space - state-space|
  int iterations;
  int restarts_used;
  std::vector<std::string> warnings;
};

// Geometric coherence 1 - max_sigma fidelity(rho, sigma).  Dispatch: qubit
// closed form at d = 2, per-block two-state closed form for generalized X
// states, otherwise the larger of the two numerical solvers (disagreement
// beyond tol::xsolver is reported as a warning).
CoherenceReport geometric_coherence(const DensityMatrix& rho,
                                    const CoherenceConfig& config = {});

struct DualityReport {
  double c_g;
  double d_q;   // optimal success probability on the induced ensemble
  double sum;   // c_g + d_q, equals 1 for linearly independent induced ensembles
};

// Throws DependentEnsemble when the induced ensemble is not linearly
// independent (the identity only holds in the independent case).
DualityReport duality_check(const DensityMatrix& rho, const CoherenceConfig& config = {});

}  // namespace cohdisc
