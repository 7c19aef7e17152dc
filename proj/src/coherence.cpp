#include "cohdisc/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cohdisc/matcore.hpp"

namespace cohdisc {

double c_l1(const DensityMatrix& rho) {
  double s = 0.0;
  for (Index i = 0; i < rho.dim(); ++i)
    for (Index j = 0; j < rho.dim(); ++j)
      if (i != j) s += std::abs(rho.matrix()(i, j));
  return s;
}

std::optional<XBlockStructure> detect_generalized_x(const DensityMatrix& rho) {
  const Index d = rho.dim();
  std::vector<Index> pairing(d);
  for (Index i = 0; i < d; ++i) {
    Index partner = i;
    for (Index j = 0; j < d; ++j) {
      if (j == i || std::abs(rho.matrix()(i, j)) <= tol::x_pattern) continue;
      if (partner != i) return std::nullopt;  // second coupling in this row
      partner = j;
    }
    pairing[i] = partner;
  }
  // Hermiticity makes the support symmetric, so the map is an involution.
  return XBlockStructure{std::move(pairing)};
}

MeasurementSolverResult solver_measurement_space(const DensityMatrix& rho,
                                                 const SearchConfig& config) {
  const InducedEnsemble ind = induced_ensemble_indexed(rho);
  DiscriminationResult res = optimal_vn_search(ind.ensemble, config);
  const Index d = rho.dim();

  // Route each measurement vector to the basis index of the state it targets;
  // indices dropped for zero prior receive the leftover completion vectors.
  const Matrix found = res.measurement.as_matrix();
  Matrix arranged(d, d);
  std::vector<bool> taken(d, false);
  const Index n = static_cast<Index>(ind.source_indices.size());
  for (Index k = 0; k < n; ++k) {
    arranged.col(ind.source_indices[k]) = found.col(k);
    taken[ind.source_indices[k]] = true;
  }
  Index next = n;
  for (Index i = 0; i < d; ++i)
    if (!taken[i]) arranged.col(i) = found.col(next++);
  return {res.success, VonNeumannMeasurement::from_columns(arranged),
          res.iterations, res.restarts_used};
}

StateSolverResult solver_state_space(const DensityMatrix& rho, int max_iters,
                                     double tol_opt) {
  const Index d = rho.dim();
  const Matrix root = matrix_sqrt(rho.matrix());
  RealVector mu = RealVector::Constant(d, 1.0 / static_cast<double>(d));
  double value = -1.0;
  int it = 0;
  bool converged = false;
  while (it < max_iters) {
    ++it;
    // Trace-norm step: sqrt(rho) diag(sqrt(mu)) = W S V*, and the basis
    // achieving the norm is the columns of W V*.
    Matrix t = root * mu.cwiseSqrt().asDiagonal();
    Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double tn = svd.singularValues().sum();
    // Reweighting step: mu_i proportional to |<f_i|sqrt(rho)|e_i>|^2.
    const Matrix overlap = (svd.matrixU() * svd.matrixV().adjoint()).adjoint() * root;
    RealVector b2(d);
    for (Index i = 0; i < d; ++i) b2[i] = std::norm(overlap(i, i));
    const double next = b2.sum();
    mu = b2 / next;
    if (next - value < tol_opt) {
      value = std::max(value, next);
      converged = true;
      break;
    }
    value = next;
  }
  // Report the exact objective at the returned weights.
  const Matrix t = root * mu.cwiseSqrt().asDiagonal();
  const double f = trace_norm(t);
  return {std::clamp(f * f, 0.0, 1.0), std::move(mu), it, converged};
}

DensityMatrix closest_incoherent_state(const DensityMatrix& rho,
                                       const VonNeumannMeasurement& m) {
  if (m.dim() != rho.dim())
    throw InvalidMeasurement("closest_incoherent_state: measurement dim " +
                             std::to_string(m.dim()) + " vs state dim " +
                             std::to_string(rho.dim()));
  const Index d = rho.dim();
  const Matrix root = matrix_sqrt(rho.matrix());
  RealVector w(d);
  for (Index i = 0; i < d; ++i) w[i] = std::norm(m.basis()[i].vec().dot(root.col(i)));
  const double f = w.sum();
  if (!(f > 0.0))
    throw InvalidMeasurement("closest_incoherent_state: measurement sees nothing");
  Matrix sigma = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) sigma(i, i) = w[i] / f;
  return DensityMatrix(std::move(sigma));
}

CoherenceBounds bounds(const DensityMatrix& rho) {
  const Index d = rho.dim();
  const double l1 = 1.0 - rho.diagonal().maxCoeff();
  const Matrix root = matrix_sqrt(rho.matrix());
  double sq = 0.0;
  for (Index i = 0; i < d; ++i) sq += std::norm(root(i, i));
  const double l2 = 1.0 - sq;
  const InducedEnsemble ind = induced_ensemble_indexed(rho);
  const double l3 = gso_error(ind.ensemble);
  std::optional<double> l4;
  if (d >= 2) {
    const RankInfo r = linear_independence(ind.ensemble.states());
    if (r.independent && static_cast<Index>(ind.source_indices.size()) == d)
      l4 = c_l1(rho) / static_cast<double>(d - 1);
  }
  return {l1, l2, l3, l4};
}

namespace {

// Identity-basis measurement, the optimizer for (near-)diagonal states.
VonNeumannMeasurement identity_measurement(Index d) {
  return VonNeumannMeasurement::from_columns(Matrix::Identity(d, d));
}

CoherenceReport qubit_path(const DensityMatrix& rho, CoherenceBounds bnds) {
  const double off = std::abs(rho.matrix()(0, 1));
  const double c_g = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 4.0 * off * off)));
  const RealVector diag = rho.diagonal();
  VonNeumannMeasurement m = identity_measurement(2);
  if (diag.minCoeff() > tol::zero_prior && off > tol::x_pattern)
    m = helstrom_two(induced_ensemble(rho)).measurement;
  DensityMatrix cis = closest_incoherent_state(rho, m);
  return {std::max(0.0, c_g), std::move(cis), "qubit_closed_form", bnds, 0.0, 0, 0, {}};
}

CoherenceReport x_block_path(const DensityMatrix& rho, const XBlockStructure& x,
                             CoherenceBounds bnds) {
  const Index d = rho.dim();
  const Matrix root = matrix_sqrt(rho.matrix());
  Matrix basis = Matrix::Zero(d, d);
  double success = 0.0;
  for (Index i = 0; i < d; ++i) {
    const Index j = x.pairing[i];
    if (j == i) {
      basis(i, i) = Complex(1.0, 0.0);
      success += rho.matrix()(i, i).real();
      continue;
    }
    if (j < i) continue;  // the block was handled from its lower index
    const double p = (rho.matrix()(i, i) + rho.matrix()(j, j)).real();
    const double q = std::abs(rho.matrix()(i, j));
    success += 0.5 * (p + std::sqrt(std::max(0.0, p * p - 4.0 * q * q)));

    // Two-state Helstrom inside the block, written without dividing by the
    // (possibly tiny) block priors: eta_i psi_i psi_i* = S e_i e_i* S.
    Matrix sb(2, 2);
    sb << root(i, i), root(i, j), root(j, i), root(j, j);
    Matrix sign = Matrix::Identity(2, 2);
    sign(1, 1) = Complex(-1.0, 0.0);
    Matrix delta = sb * sign * sb.adjoint();
    delta = (delta + delta.adjoint()) / 2.0;
    const Spectrum sp = eigh(delta);
    const Vector hi = sp.eigenvectors.col(1);  // positive side answers "i"
    const Vector lo = sp.eigenvectors.col(0);
    basis(i, i) = hi[0];
    basis(j, i) = hi[1];
    basis(i, j) = lo[0];
    basis(j, j) = lo[1];
  }
  const double c_g = std::clamp(1.0 - success, 0.0, 1.0);
  const VonNeumannMeasurement m = VonNeumannMeasurement::from_columns(basis);
  DensityMatrix cis = closest_incoherent_state(rho, m);
  return {c_g, std::move(cis), "x_block", bnds, 0.0, 0, 0, {}};
}

}  // namespace

CoherenceReport geometric_coherence(const DensityMatrix& rho,
                                    const CoherenceConfig& config) {
  CoherenceBounds bnds = bounds(rho);
  if (!config.force_numerical) {
    if (rho.dim() == 2) return qubit_path(rho, bnds);
    if (const auto x = detect_generalized_x(rho)) return x_block_path(rho, *x, bnds);
  }

  const MeasurementSolverResult ms = solver_measurement_space(rho, config.search);
  const StateSolverResult ss = solver_state_space(rho, config.search.max_iters,
                                                  config.search.tol_opt);
  const double gap = std::abs(ms.f_value - ss.f_value);
  std::vector<std::string> warnings;
  if (gap > tol::xsolver)
    warnings.push_back("solvers disagree by " + std::to_string(gap));
  if (!ss.converged)
    warnings.push_back("state-space solver still ascending at iteration cap");

  const double f = std::max(ms.f_value, ss.f_value);
  DensityMatrix cis = ms.f_value >= ss.f_value
                          ? closest_incoherent_state(rho, ms.measurement)
                          : [&] {
                              Matrix sigma = Matrix::Zero(rho.dim(), rho.dim());
                              for (Index i = 0; i < rho.dim(); ++i)
                                sigma(i, i) = ss.weights[i];
                              return DensityMatrix(std::move(sigma));
                            }();
  return {std::clamp(1.0 - f, 0.0, 1.0), std::move(cis), "numerical",
          bnds,     gap,            ms.iterations + ss.iterations,
          ms.restarts_used, std::move(warnings)};
}

DualityReport duality_check(const DensityMatrix& rho, const CoherenceConfig& config) {
  const InducedEnsemble ind = induced_ensemble_indexed(rho);
  const RankInfo r = linear_independence(ind.ensemble.states());
  if (!r.independent)
    throw DependentEnsemble("duality_check: induced ensemble has rank " +
                            std::to_string(r.rank) + " of " +
                            std::to_string(ind.ensemble.size()));
  const double d_q = optimal_vn_search(ind.ensemble, config.search).success;
  const double c_g = geometric_coherence(rho, config).c_g;
  return {c_g, d_q, c_g + d_q};
}

}  // namespace cohdisc
