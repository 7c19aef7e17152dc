#include "cohdisc/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cohdisc/matcore.hpp"

namespace cohdisc {

RecoveryResult recover_optimal_measurement(const PureEnsemble& e,
                                           const SearchConfig& config) {
  const RankInfo rank = linear_independence(e.states());
  if (!rank.independent)
    throw DependentEnsemble("recover_optimal_measurement: ensemble rank " +
                            std::to_string(rank.rank) + " of " +
                            std::to_string(e.size()));
  for (Index i = 0; i < e.size(); ++i)
    if (e.priors()[i] <= tol::zero_prior)
      throw InvalidEnsemble("recover_optimal_measurement: prior " +
                            std::to_string(i) + " vanishes");

  const Index n = e.size();
  const Index d = e.dim();
  const QSDState q = qsd_state(e);
  const InducedEnsemble ind = induced_ensemble_indexed(q.matrix);
  const PureEnsemble lifted = pad_ensemble(ind.ensemble, d);
  const Matrix u = align_unitary(e.states(), lifted.states());

  const MeasurementSolverResult solved = solver_measurement_space(q.matrix, config);
  Matrix carried(d, n);
  for (Index i = 0; i < n; ++i) {
    Vector padded = Vector::Zero(d);
    padded.head(n) = solved.measurement.basis()[i].vec();
    carried.col(i) = u * padded;
  }
  const VonNeumannMeasurement m =
      VonNeumannMeasurement::from_columns(complete_basis(carried, d));

  const double success = success_probability(e, m);
  RealVector certificate(n);
  for (Index i = 0; i < n; ++i)
    certificate[i] =
        e.priors()[i] * std::norm(m.basis()[i].vec().dot(e.states()[i].vec()));
  const double c_g = std::clamp(1.0 - solved.f_value, 0.0, 1.0);
  return {success,     m,
          u,           std::move(certificate),
          c_g,         std::abs(success - (1.0 - c_g)),
          solved.iterations, solved.restarts_used};
}

RecoveryVerification verify_recovery(const PureEnsemble& e,
                                     const RecoveryResult& r) {
  RecoveryVerification v;
  v.independent = linear_independence(e.states()).independent;
  if (!v.independent) return v;

  double worst = 0.0;

  const double replay = success_probability(e, r.measurement);
  const double d_success = std::abs(replay - r.success);
  v.success_consistent = d_success <= tol::num;
  worst = std::max(worst, d_success);

  const Matrix f = r.measurement.as_matrix();
  const double d_ortho =
      (f.adjoint() * f - Matrix::Identity(f.cols(), f.cols()))
          .cwiseAbs()
          .maxCoeff();
  v.measurement_orthonormal = d_ortho <= tol::norm;
  worst = std::max(worst, d_ortho);

  const QSDState q = qsd_state(e);
  const double c_g = geometric_coherence(q.matrix).c_g;
  const double d_coh = std::abs((1.0 - r.success) - c_g);
  v.error_equals_qsd_coherence = d_coh <= tol::recovery;
  worst = std::max(worst, d_coh);

  // The density operator has to hand back the ensemble it came from: priors
  // on the diagonal, the Gram through the induced states.
  const InducedEnsemble ind = induced_ensemble_indexed(q.matrix);
  double d_qsd = (q.matrix.diagonal() - e.priors()).cwiseAbs().maxCoeff();
  if (ind.ensemble.size() == e.size()) {
    const Matrix ge = gram(e.states());
    const Matrix gi = gram(ind.ensemble.states());
    d_qsd = std::max(d_qsd, (ge - gi).cwiseAbs().maxCoeff());
  } else {
    d_qsd = 1.0;  // a dropped index means the round trip lost a state
  }
  v.qsd_matches_ensemble = d_qsd <= tol::align;
  worst = std::max(worst, d_qsd);

  double d_align =
      (r.alignment.adjoint() * r.alignment - Matrix::Identity(e.dim(), e.dim()))
          .cwiseAbs()
          .maxCoeff();
  if (ind.ensemble.size() == e.size()) {
    for (Index i = 0; i < e.size(); ++i) {
      Vector padded = Vector::Zero(e.dim());
      padded.head(ind.ensemble.dim()) = ind.ensemble.states()[i].vec();
      d_align = std::max(
          d_align, (e.states()[i].vec() - r.alignment * padded).norm());
    }
  }
  v.alignment_unitary = d_align <= tol::align;
  worst = std::max(worst, d_align);

  v.worst_residual = worst;
  v.ok = v.success_consistent && v.measurement_orthonormal &&
         v.error_equals_qsd_coherence && v.qsd_matches_ensemble &&
         v.alignment_unitary;
  return v;
}

}  // namespace cohdisc
