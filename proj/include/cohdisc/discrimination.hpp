#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohdisc/ensembles.hpp"
#include "cohdisc/types.hpp"

namespace cohdisc {

// Complete orthonormal basis; outcome i targets ensemble state i, outcomes
// past the ensemble length are null.
class VonNeumannMeasurement {
 public:
  explicit VonNeumannMeasurement(std::vector<StateVector> basis);
  static VonNeumannMeasurement from_columns(const Matrix& u);
  const std::vector<StateVector>& basis() const { return basis_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  Matrix as_matrix() const;

 private:
  std::vector<StateVector> basis_;
};

struct SearchConfig {
  int restarts = 20;          // random restarts in addition to the warm start
  int max_iters = 500;
  double tol_opt = 1e-12;     // stop once the ascent gain falls below this
  std::uint64_t seed = 0xC0FFEE;
};

struct DiscriminationResult {
  double success = 0.0;
  double error = 1.0;         // always 1 - success
  VonNeumannMeasurement measurement;
  std::string method_tag;
  int iterations = 0;         // iterations of the restart that produced the result
  int restarts_used = 0;
  bool converged = true;
};

// P(success) = sum_i eta_i |<f_i|psi_i>|^2.  The measurement may live in a
// larger space than the ensemble (states are zero-padded); the ensemble may
// not have more states than the measurement has outcomes.
double success_probability(const PureEnsemble& e, const VonNeumannMeasurement& m);

// Optimal two-state discrimination.  The success probability is
// (1 + tracenorm(eta_1 P_1 - eta_2 P_2)) / 2 and the measurement projects on
// the positive eigenspace of that difference operator.
DiscriminationResult helstrom_two(const PureEnsemble& e);

struct GsoMeasurement {
  VonNeumannMeasurement measurement;   // basis[i] targets state i
  std::vector<Index> selected;         // original indices, selection order
};

// Sorts by descending prior (ties keep the lower original index first),
// greedily keeps a maximal linearly independent subsequence, orthogonalizes
// it, and completes the basis.  Non-selected states are covered by completion
// vectors orthogonal to the selected span, so they are never identified.
GsoMeasurement gso_measurement(const PureEnsemble& e);

// Error of the measurement above: sum over selected states of the prior times
// the leaked overlap onto earlier orthogonalized vectors, plus the full prior
// of every non-selected state.
double gso_error(const PureEnsemble& e);

// Best von Neumann measurement found by monotone ascent (see the .cpp) from
// the greedy warm start plus config.restarts Haar-random starts.  With more
// states than dimensions the ensemble is lifted isometrically to dim n first,
// so the returned measurement has dim max(n, d).  Deterministic per seed.
DiscriminationResult optimal_vn_search(const PureEnsemble& e,
                                       const SearchConfig& config = {});

struct BruteforceResult {
  double success;
  double resolution_bound;  // |reported - true optimum| is at most this
};

// Exhaustive reference for dim-2 ensembles: scans every basis
// (cos t, e^{i phi} sin t) / (-e^{-i phi} sin t, cos t) on a grid_n x grid_n
// grid over t in [0, pi/2], phi in [0, 2 pi), then refines locally.
BruteforceResult bruteforce_vn_d2(const PureEnsemble& e, int grid_n = 2000);

}  // namespace cohdisc
