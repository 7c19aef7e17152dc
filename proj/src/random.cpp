#include "cohdisc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cohdisc {

Matrix random_complex_matrix(Index rows, Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.cgaussian();
  return m;
}

Matrix haar_unitary(Index dim, Rng& rng) {
  const Matrix g = random_complex_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < dim; ++i) {
    const double a = std::abs(r(i, i));
    q.col(i) *= a > 0.0 ? r(i, i) / a : Complex(1.0, 0.0);
  }
  return q;
}

StateVector random_state(Index dim, Rng& rng) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = rng.cgaussian();
  v /= v.norm();
  return StateVector(std::move(v));
}

RealVector random_priors(Index n, Rng& rng) {
  RealVector p(n);
  for (Index i = 0; i < n; ++i) p[i] = -std::log(1.0 - rng.uniform());
  p /= p.sum();
  return p;
}

PureEnsemble random_ensemble(Index n, Index dim, Rng& rng) {
  std::vector<StateVector> states;
  states.reserve(n);
  for (Index i = 0; i < n; ++i) states.push_back(random_state(dim, rng));
  return PureEnsemble(random_priors(n, rng), std::move(states));
}

DensityMatrix random_density(Index dim, Rng& rng, double mix_floor) {
  const Matrix a = random_complex_matrix(dim, dim, rng);
  Matrix w = a * a.adjoint();
  w /= w.trace().real();
  if (mix_floor > 0.0) {
    w *= (1.0 - mix_floor);
    w += (mix_floor / static_cast<double>(dim)) * Matrix::Identity(dim, dim);
  }
  w = (w + w.adjoint()) / 2.0;
  return DensityMatrix(std::move(w));
}

DensityMatrix random_paired_density(Index dim, Rng& rng) {
  std::vector<Index> order(dim);
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng.engine());

  // Diagonal bounded away from zero so the pair couplings stay structural.
  RealVector diag = random_priors(dim, rng);
  diag = 0.7 * diag + RealVector::Constant(dim, 0.3 / static_cast<double>(dim));

  Matrix m = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) m(i, i) = diag[i];
  for (Index k = 0; k + 1 < dim; k += 2) {
    const Index i = order[k], j = order[k + 1];
    const double cap = std::sqrt(diag[i] * diag[j]);
    const double mag = cap * (0.2 + 0.75 * rng.uniform());
    const double phase = 2.0 * M_PI * rng.uniform();
    m(i, j) = std::polar(mag, phase);
    m(j, i) = std::conj(m(i, j));
  }
  return DensityMatrix(std::move(m));
}

}  // namespace cohdisc
