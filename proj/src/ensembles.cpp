#include "cohdisc/ensembles.hpp"

#include <cmath>
#include <utility>

namespace cohdisc {

PureEnsemble::PureEnsemble(RealVector priors, std::vector<StateVector> states)
    : priors_(std::move(priors)), states_(std::move(states)) {
  if (states_.empty()) throw InvalidEnsemble("PureEnsemble: empty");
  if (priors_.size() != static_cast<Index>(states_.size()))
    throw InvalidEnsemble("PureEnsemble: " + std::to_string(priors_.size()) +
                          " priors for " + std::to_string(states_.size()) + " states");
  for (const auto& s : states_)
    if (s.dim() != states_.front().dim())
      throw InvalidEnsemble("PureEnsemble: state dims differ");
  for (Index i = 0; i < priors_.size(); ++i)
    if (!(priors_[i] >= 0.0))
      throw InvalidEnsemble("PureEnsemble: prior " + std::to_string(i) + " is negative");
  if (std::abs(priors_.sum() - 1.0) > tol::trace)
    throw InvalidEnsemble("PureEnsemble: priors sum to " + std::to_string(priors_.sum()));
}

QSDState qsd_state(const PureEnsemble& e) {
  const Index n = e.size();
  Matrix g = gram(e.states());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = std::sqrt(e.priors()[i] * e.priors()[j]) * g(i, j);
  m = (m + m.adjoint()) / 2.0;
  return {DensityMatrix(std::move(m)), std::move(g), e.priors()};
}

InducedEnsemble induced_ensemble_indexed(const DensityMatrix& rho) {
  const Matrix root = matrix_sqrt(rho.matrix());
  const Index d = rho.dim();
  std::vector<Index> kept;
  std::vector<StateVector> states;
  std::vector<double> priors;
  for (Index i = 0; i < d; ++i) {
    const double eta = std::max(0.0, rho.matrix()(i, i).real());
    if (eta <= tol::zero_prior) continue;
    Vector col = root.col(i);
    col /= col.norm();  // norm equals sqrt(eta) up to eigensolver residue
    kept.push_back(i);
    states.emplace_back(std::move(col));
    priors.push_back(eta);
  }
  if (states.empty()) throw InvalidEnsemble("induced_ensemble: all priors vanish");
  RealVector p = Eigen::Map<RealVector>(priors.data(), static_cast<Index>(priors.size()));
  return {PureEnsemble(std::move(p), std::move(states)), std::move(kept)};
}

PureEnsemble induced_ensemble(const DensityMatrix& rho) {
  return induced_ensemble_indexed(rho).ensemble;
}

Matrix align_unitary(const std::vector<StateVector>& a,
                     const std::vector<StateVector>& b,
                     bool conjugate_b) {
  if (a.empty() || a.size() != b.size())
    throw DimMismatch("align_unitary: family sizes " + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()));
  const Index d = a.front().dim();
  if (b.front().dim() != d)
    throw DimMismatch("align_unitary: state dims differ");
  const Index n = static_cast<Index>(a.size());

  Matrix pa(d, n), pb(d, n);
  for (Index i = 0; i < n; ++i) {
    pa.col(i) = a[i].vec();
    pb.col(i) = conjugate_b ? b[i].vec().conjugate() : b[i].vec();
  }
  const double gram_gap = (pa.adjoint() * pa - pb.adjoint() * pb).cwiseAbs().maxCoeff();
  if (gram_gap > tol::align)
    throw GramMismatch("align_unitary: Gram matrices differ by " + std::to_string(gram_gap));

  // Procrustes: the polar factor of pa pb* minimizes ||pa - U pb||_F, and with
  // equal Grams the minimum is an exact match.
  const Matrix u = polar_unitary(pa * pb.adjoint());
  const double residual = (pa - u * pb).colwise().norm().maxCoeff();
  if (residual > tol::align)
    throw GramMismatch("align_unitary: mapping residual " + std::to_string(residual));
  return u;
}

QSDState multicopy_qsd_state(const PureEnsemble& e, int copies) {
  if (copies < 1) throw InvalidEnsemble("multicopy_qsd_state: copies must be >= 1");
  const Index n = e.size();
  const Matrix g = gram(e.states());
  Matrix gp(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Complex v(1.0, 0.0);
      for (int c = 0; c < copies; ++c) v *= g(i, j);
      gp(i, j) = v;
    }
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = std::sqrt(e.priors()[i] * e.priors()[j]) * gp(i, j);
  m = (m + m.adjoint()) / 2.0;
  return {DensityMatrix(std::move(m)), std::move(gp), e.priors()};
}

StateVector pad_state(const StateVector& s, Index dim) {
  if (dim < s.dim()) throw DimMismatch("pad_state: target dim smaller than state");
  if (dim == s.dim()) return s;
  Vector v = Vector::Zero(dim);
  v.head(s.dim()) = s.vec();
  return StateVector(std::move(v));
}

PureEnsemble pad_ensemble(const PureEnsemble& e, Index dim) {
  std::vector<StateVector> states;
  states.reserve(e.size());
  for (const auto& s : e.states()) states.push_back(pad_state(s, dim));
  return PureEnsemble(e.priors(), std::move(states));
}

}  // namespace cohdisc
