#pragma once

#include <cstdint>
#include <random>

#include "cohdisc/ensembles.hpp"
#include "cohdisc/types.hpp"

namespace cohdisc {

// Seeded generator for reproducible fixtures and solver restarts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return unif_(gen_); }                    // [0, 1)
  double gaussian() { return gauss_(gen_); }
  Complex cgaussian() { return {gauss_(gen_), gauss_(gen_)}; }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

// Derives a stream seed from a base seed and a counter (used so concurrent or
// reordered restarts draw identical randomness).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
  return base + 0x9E3779B97F4A7C15ULL * (counter + 1);
}

Matrix random_complex_matrix(Index rows, Index cols, Rng& rng);

// Haar-distributed unitary: QR of a Gaussian matrix with the R-diagonal
// phases folded into Q.
Matrix haar_unitary(Index dim, Rng& rng);

StateVector random_state(Index dim, Rng& rng);

// Strictly positive priors (flat Dirichlet).
RealVector random_priors(Index n, Rng& rng);

PureEnsemble random_ensemble(Index n, Index dim, Rng& rng);

// Wishart density matrix, optionally mixed with identity/dim by mix_floor to
// bound the condition number (mix_floor = 0 gives the raw draw).
DensityMatrix random_density(Index dim, Rng& rng, double mix_floor = 0.0);

// Random density matrix whose off-diagonal support is a random pairing
// (every row couples to at most one partner), with all pair couplings
// comfortably above the structural-zero threshold.
DensityMatrix random_paired_density(Index dim, Rng& rng);

}  // namespace cohdisc
