#include "cohdisc/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "cohdisc/coherence.hpp"
#include "cohdisc/discrimination.hpp"
#include "cohdisc/ensembles.hpp"
#include "cohdisc/matcore.hpp"
#include "cohdisc/random.hpp"
#include "cohdisc/recovery.hpp"
#include "cohdisc/types.hpp"

namespace cohdisc {

namespace {

// Fixture seed for check 9.  Frozen: the monotone decay curve it produces is
// part of the recorded behaviour, independent of the user seed.
constexpr std::uint64_t kMulticopySeed = 11;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

PureEnsemble two_state_angle(double theta) {
  Vector a(2), b(2);
  a << Complex(std::cos(theta), 0.0), Complex(std::sin(theta), 0.0);
  b << Complex(std::cos(theta), 0.0), Complex(-std::sin(theta), 0.0);
  RealVector priors(2);
  priors << 0.5, 0.5;
  return PureEnsemble(priors, {StateVector(a), StateVector(b)});
}

// Check 1: the qubit closed form and the generic solver agree, fast.
CriterionResult check_qubit_closed_form(std::uint64_t seed, bool quick) {
  CriterionResult r{1, "qubit closed form matches the numerical solver"};
  Timer timer;
  Rng rng(derive_seed(seed, 1));
  const int samples = quick ? 100 : 1000;
  double worst = 0.0;
  CoherenceConfig numerical;
  numerical.force_numerical = true;
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = random_density(2, rng);
    const CoherenceReport direct = geometric_coherence(rho);
    if (direct.method_tag != "qubit_closed_form") {
      r.detail = "dispatch picked " + direct.method_tag;
      r.seconds = timer.seconds();
      return r;
    }
    const CoherenceReport generic = geometric_coherence(rho, numerical);
    worst = std::max(worst, std::abs(direct.c_g - generic.c_g));
  }
  r.seconds = timer.seconds();
  const bool fast = r.seconds < 5.0;
  r.passed = worst <= 1e-7 && fast;
  r.detail = "worst gap " + fmt(worst) + " over " + std::to_string(samples) +
             " states in " + fmt(r.seconds) + " s (budget 5 s)";
  return r;
}

// Check 2: two equiprobable real states; the recovered measurement has to
// reproduce the closed-form success (1 + sin 2t)/2 and the known basis.
CriterionResult check_two_state_recovery(std::uint64_t, bool) {
  CriterionResult r{2, "two-state recovery reproduces the closed form"};
  Timer timer;
  const double pi = std::numbers::pi;
  const double angles[] = {pi / 12.0, pi / 8.0, pi / 6.0, pi / 4.0};
  Vector plus(2), minus(2);
  plus << Complex(1.0 / std::sqrt(2.0), 0.0), Complex(1.0 / std::sqrt(2.0), 0.0);
  minus << Complex(1.0 / std::sqrt(2.0), 0.0), Complex(-1.0 / std::sqrt(2.0), 0.0);
  double worst_value = 0.0, worst_basis = 0.0;
  bool verified = true;
  for (double theta : angles) {
    const PureEnsemble e = two_state_angle(theta);
    const RecoveryResult rec = recover_optimal_measurement(e);
    const double expect = 0.5 * (1.0 + std::sin(2.0 * theta));
    worst_value = std::max(worst_value, std::abs(rec.success - expect));
    const Vector f0 = rec.measurement.basis()[0].vec();
    const Vector f1 = rec.measurement.basis()[1].vec();
    worst_basis = std::max(worst_basis, 1.0 - std::abs(f0.dot(plus)));
    worst_basis = std::max(worst_basis, 1.0 - std::abs(f1.dot(minus)));
    verified = verified && verify_recovery(e, rec).ok;
  }
  const double pinned =
      recover_optimal_measurement(two_state_angle(pi / 8.0)).success;
  const double pin_gap = std::abs(pinned - 0.8535533905932737);
  r.passed = worst_value <= 1e-9 && worst_basis <= 1e-7 && verified &&
             pin_gap <= 1e-9;
  r.detail = "worst value gap " + fmt(worst_value) + ", worst basis gap " +
             fmt(worst_basis) + ", pinned-angle gap " + fmt(pin_gap) +
             (verified ? "" : ", verification failed");
  r.seconds = timer.seconds();
  return r;
}

// Check 3: the two-state optimum against an exhaustive basis scan.
CriterionResult check_bruteforce_agreement(std::uint64_t seed, bool quick) {
  CriterionResult r{3, "two-state optimum agrees with the exhaustive scan"};
  Timer timer;
  Rng rng(derive_seed(seed, 3));
  const int samples = quick ? 20 : 200;
  double worst = 0.0, best_under = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PureEnsemble e = random_ensemble(2, 2, rng);
    const DiscriminationResult h = helstrom_two(e);
    const BruteforceResult b = bruteforce_vn_d2(e);
    worst = std::max(worst, std::abs(h.success - b.success));
    best_under = std::min(best_under, h.success - b.success);
  }
  r.passed = worst <= 1e-6 && best_under >= -1e-9;
  r.detail = "worst |closed - scan| " + fmt(worst) + ", scan overshoot " +
             fmt(-best_under) + " over " + std::to_string(samples) + " pairs";
  r.seconds = timer.seconds();
  return r;
}

// Check 4: paired-support states, block closed form against the solver, plus
// one pinned example.
CriterionResult check_x_block(std::uint64_t seed, bool quick) {
  CriterionResult r{4, "paired-support closed form matches the solver"};
  Timer timer;
  Rng rng(derive_seed(seed, 4));
  const int samples = quick ? 10 : 100;
  double worst = 0.0;
  CoherenceConfig numerical;
  numerical.force_numerical = true;
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = random_paired_density(4, rng);
    const CoherenceReport direct = geometric_coherence(rho);
    if (direct.method_tag != "x_block") {
      r.detail = "dispatch picked " + direct.method_tag;
      r.seconds = timer.seconds();
      return r;
    }
    const CoherenceReport generic = geometric_coherence(rho, numerical);
    worst = std::max(worst, std::abs(direct.c_g - generic.c_g));
  }
  Matrix x = Matrix::Zero(4, 4);
  x(0, 0) = 0.3;
  x(1, 1) = 0.2;
  x(2, 2) = 0.2;
  x(3, 3) = 0.3;
  x(0, 3) = x(3, 0) = 0.2;
  x(1, 2) = x(2, 1) = 0.1;
  const double pinned = geometric_coherence(DensityMatrix(x)).c_g;
  const double pin_gap = std::abs(pinned - 0.10318812149313325);
  r.passed = worst <= 1e-6 && pin_gap <= 1e-12;
  r.detail = "worst gap " + fmt(worst) + " over " + std::to_string(samples) +
             " states, pinned example gap " + fmt(pin_gap);
  r.seconds = timer.seconds();
  return r;
}

// Check 5: the cheap upper bounds hold, and the greedy bound improves on the
// trivial one.
CriterionResult check_bounds(std::uint64_t seed, bool quick) {
  CriterionResult r{5, "coherence respects its upper bounds"};
  Timer timer;
  Rng rng(derive_seed(seed, 5));
  const int samples = quick ? 20 : 200;
  double worst = -1.0;
  int missing_l4 = 0, greedy_not_better = 0;
  for (int s = 0; s < samples; ++s) {
    const Index d = 3 + (s % 3);
    const DensityMatrix rho = random_density(d, rng, 1e-3);
    const CoherenceReport rep = geometric_coherence(rho);
    const CoherenceBounds& b = rep.bounds;
    worst = std::max({worst, rep.c_g - b.l1, rep.c_g - b.l2, rep.c_g - b.l3});
    if (b.l4)
      worst = std::max(worst, rep.c_g - *b.l4);
    else
      ++missing_l4;
    if (!(b.l3 < b.l1)) ++greedy_not_better;
  }
  r.passed = worst <= 1e-7 && missing_l4 == 0 && greedy_not_better == 0;
  r.detail = "worst bound violation " + fmt(worst) + ", l4 absent " +
             std::to_string(missing_l4) + ", greedy not under trivial " +
             std::to_string(greedy_not_better) + " of " +
             std::to_string(samples);
  r.seconds = timer.seconds();
  return r;
}

// Check 6: coherence plus optimal discrimination of the induced ensemble
// sums to one for full-rank states.
CriterionResult check_duality(std::uint64_t seed, bool quick) {
  CriterionResult r{6, "coherence and discrimination sum to one"};
  Timer timer;
  Rng rng(derive_seed(seed, 6));
  const int samples = quick ? 20 : 200;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Index d = 2 + (s % 3);
    const DensityMatrix rho = random_density(d, rng, 1e-3);
    const DualityReport dr = duality_check(rho);
    worst = std::max(worst, std::abs(dr.sum - 1.0));
  }
  r.passed = worst <= 1e-6;
  r.detail = "worst |c_g + d_q - 1| " + fmt(worst) + " over " +
             std::to_string(samples) + " states";
  r.seconds = timer.seconds();
  return r;
}

// Check 7: solving the ensemble directly and through its density operator
// gives the same answer, and the two coherence solvers agree along the way.
CriterionResult check_detour(std::uint64_t seed, bool quick) {
  CriterionResult r{7, "ensemble detour equals direct discrimination"};
  Timer timer;
  Rng rng(derive_seed(seed, 7));
  const int samples = quick ? 20 : 200;
  double worst = 0.0, worst_gap = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Index d = 2 + (s % 3);
    // Keep the fixtures comfortably independent; nearly collinear draws make
    // the comparison about solver conditioning instead of the identity.
    PureEnsemble e = random_ensemble(d, d, rng);
    for (int tries = 0; tries < 64; ++tries) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(gram(e.states()));
      if (es.eigenvalues()(0) >= 1e-2 * es.eigenvalues()(d - 1)) break;
      e = random_ensemble(d, d, rng);
    }
    const DiscriminationResult direct = optimal_vn_search(e);
    const CoherenceReport rep = geometric_coherence(qsd_state(e).matrix);
    worst = std::max(worst, std::abs((1.0 - direct.success) - rep.c_g));
    worst_gap = std::max(worst_gap, rep.solver_gap);
  }
  r.passed = worst <= 1e-6 && worst_gap <= 1e-6;
  r.detail = "worst |error - c_g| " + fmt(worst) + ", worst solver gap " +
             fmt(worst_gap) + " over " + std::to_string(samples) +
             " ensembles";
  r.seconds = timer.seconds();
  return r;
}

// Check 8: alignment recovers a hidden rotation, unitary and antiunitary.
CriterionResult check_alignment(std::uint64_t seed, bool quick) {
  CriterionResult r{8, "alignment reproduces the hidden rotation"};
  Timer timer;
  Rng rng(derive_seed(seed, 8));
  const int samples = quick ? 20 : 200;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Index d = 2 + (s % 4);
    std::vector<StateVector> a;
    for (Index i = 0; i < d; ++i) a.push_back(random_state(d, rng));
    const Matrix w = haar_unitary(d, rng);
    const bool conj = (s % 2) == 1;
    std::vector<StateVector> b;
    for (const auto& st : a) {
      Vector v = conj ? Vector(w * st.vec().conjugate()) : Vector(w * st.vec());
      b.emplace_back(std::move(v));
    }
    const Matrix u = align_unitary(a, b, conj);
    for (Index i = 0; i < d; ++i) {
      const Vector mapped =
          conj ? Vector(u * b[i].vec().conjugate()) : Vector(u * b[i].vec());
      worst = std::max(worst, (a[i].vec() - mapped).norm());
    }
  }
  r.passed = worst <= 1e-8;
  r.detail = "worst residual " + fmt(worst) + " over " +
             std::to_string(samples) + " families";
  r.seconds = timer.seconds();
  return r;
}

// Check 9: with many copies the greedy measurement becomes optimal.  The
// fixture is frozen; the trace it produces is part of the record.
CriterionResult check_multicopy(std::uint64_t, bool) {
  CriterionResult r{9, "multicopy handoff drives the greedy error to zero"};
  Timer timer;
  Rng rng(kMulticopySeed);
  PureEnsemble e = random_ensemble(3, 3, rng);
  for (int tries = 0; tries < 256; ++tries) {
    bool mild = true;
    for (Index i = 0; i < 3 && mild; ++i)
      for (Index j = i + 1; j < 3; ++j)
        if (std::abs(e.states()[i].vec().dot(e.states()[j].vec())) > 0.8)
          mild = false;
    if (mild) break;
    e = random_ensemble(3, 3, rng);
  }
  double prev = 2.0, final_error = 1.0;
  double worst_rise = 0.0, worst_excess = 0.0;
  for (int copies = 1; copies <= 50; ++copies) {
    const QSDState q = multicopy_qsd_state(e, copies);
    const double g = gso_error(induced_ensemble(q.matrix));
    worst_rise = std::max(worst_rise, g - prev);
    prev = g;
    final_error = g;
    const double cap = c_l1(q.matrix) / 2.0;
    worst_excess = std::max(worst_excess, g - cap);
  }
  r.passed = worst_rise <= 1e-12 && final_error <= 1e-6 &&
             worst_excess <= 1e-9;
  r.detail = "worst rise " + fmt(worst_rise) + ", error at 50 copies " +
             fmt(final_error) + ", worst excess over the pairwise cap " +
             fmt(worst_excess);
  r.seconds = timer.seconds();
  return r;
}

// Check 10: with more states than dimensions the search error never beats
// the coherence of the density operator.
CriterionResult check_crowded(std::uint64_t seed, bool quick) {
  CriterionResult r{10, "search stays within coherence for crowded ensembles"};
  Timer timer;
  Rng rng(derive_seed(seed, 10));
  const int samples = quick ? 10 : 100;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PureEnsemble e = random_ensemble(4, 3, rng);
    const DiscriminationResult direct = optimal_vn_search(e);
    const CoherenceReport rep = geometric_coherence(qsd_state(e).matrix);
    worst = std::max(worst, (1.0 - direct.success) - rep.c_g);
  }
  r.passed = worst <= 1e-6;
  r.detail = "worst error excess over coherence " + fmt(worst) + " over " +
             std::to_string(samples) + " ensembles";
  r.seconds = timer.seconds();
  return r;
}

}  // namespace

ReproductionReport run_reproduction(
    std::uint64_t seed, bool quick,
    const std::function<void(const CriterionResult&)>& on_result) {
  using Check = CriterionResult (*)(std::uint64_t, bool);
  const Check checks[] = {
      check_qubit_closed_form, check_two_state_recovery,
      check_bruteforce_agreement, check_x_block, check_bounds,
      check_duality, check_detour, check_alignment,
      check_multicopy, check_crowded};

  ReproductionReport report;
  report.all_passed = true;
  Timer total;
  for (std::size_t k = 0; k < std::size(checks); ++k) {
    CriterionResult r;
    try {
      r = checks[k](seed, quick);
    } catch (const std::exception& err) {
      r.id = static_cast<int>(k) + 1;
      r.name = "check " + std::to_string(k + 1);
      r.passed = false;
      r.detail = std::string("raised: ") + err.what();
    }
    report.all_passed = report.all_passed && r.passed;
    if (on_result) on_result(r);
    report.criteria.push_back(std::move(r));
  }
  report.total_seconds = total.seconds();
  return report;
}

}  // namespace cohdisc
