#include <cmath>
#include <vector>

#include "doctest.h"

#include "cohdisc/discrimination.hpp"
#include "cohdisc/ensembles.hpp"
#include "cohdisc/matcore.hpp"
#include "cohdisc/random.hpp"
#include "cohdisc/types.hpp"

using namespace cohdisc;

namespace {

const double kPi = std::acos(-1.0);

PureEnsemble angle_pair(double theta) {
  Vector a(2), b(2);
  a << std::cos(theta), std::sin(theta);
  b << std::cos(theta), -std::sin(theta);
  RealVector p(2);
  p << 0.5, 0.5;
  return PureEnsemble(p, {StateVector(a), StateVector(b)});
}

}  // namespace

TEST_SUITE("discrimination") {

TEST_CASE("measurement construction is picky") {
  Matrix ok = Matrix::Identity(2, 2);
  CHECK_NOTHROW(VonNeumannMeasurement::from_columns(ok));
  Matrix skew(2, 2);
  skew << 1.0, 0.6, 0.0, 0.8;
  CHECK_THROWS_AS(VonNeumannMeasurement::from_columns(skew),
                  InvalidMeasurement);
}

TEST_CASE("success_probability on distinguishable states is one") {
  Vector e0(2), e1(2);
  e0 << 1.0, 0.0;
  e1 << 0.0, 1.0;
  RealVector p(2);
  p << 0.3, 0.7;
  const PureEnsemble e(p, {StateVector(e0), StateVector(e1)});
  const auto m = VonNeumannMeasurement::from_columns(Matrix::Identity(2, 2));
  CHECK(success_probability(e, m) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("helstrom matches the closed form on the pinned angle") {
  const PureEnsemble e = angle_pair(kPi / 8.0);
  const DiscriminationResult r = helstrom_two(e);
  CHECK(r.success == doctest::Approx(0.8535533905932737).epsilon(1e-14));
  CHECK(r.error == doctest::Approx(1.0 - r.success));
  // Known optimum: project on (1,1)/sqrt(2) for the first state and the
  // orthogonal complement for the second.
  Vector plus(2), minus(2);
  plus << std::sqrt(0.5), std::sqrt(0.5);
  minus << std::sqrt(0.5), -std::sqrt(0.5);
  CHECK(std::abs(r.measurement.basis()[0].vec().dot(plus)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.measurement.basis()[1].vec().dot(minus)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("helstrom success formula over random pairs") {
  Rng rng(211);
  for (int s = 0; s < 25; ++s) {
    const PureEnsemble e = random_ensemble(2, 2, rng);
    const DiscriminationResult r = helstrom_two(e);
    const double overlap =
        std::abs(e.states()[0].vec().dot(e.states()[1].vec()));
    const double expect =
        0.5 * (1.0 + std::sqrt(1.0 - 4.0 * e.priors()[0] * e.priors()[1] *
                                         overlap * overlap));
    CHECK(r.success == doctest::Approx(expect).epsilon(1e-10));
    CHECK(success_probability(e, r.measurement) ==
          doctest::Approx(r.success).epsilon(1e-10));
  }
}

TEST_CASE("helstrom needs exactly two states") {
  Rng rng(213);
  CHECK_THROWS_AS(helstrom_two(random_ensemble(3, 2, rng)), WrongArity);
}

TEST_CASE("greedy error is exactly the complement of its own success") {
  Rng rng(217);
  for (int s = 0; s < 10; ++s) {
    const PureEnsemble e = random_ensemble(4, 4, rng);
    const GsoMeasurement g = gso_measurement(e);
    CHECK(gso_error(e) ==
          doctest::Approx(1.0 - success_probability(e, g.measurement))
              .epsilon(1e-10));
  }
}

TEST_CASE("greedy error on the pinned angle pair") {
  const double theta = kPi / 8.0;
  const PureEnsemble e = angle_pair(theta);
  const double c = std::cos(2.0 * theta);
  CHECK(gso_error(e) == doctest::Approx(0.5 * c * c).epsilon(1e-12));
  CHECK(gso_error(e) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("greedy accounting loses the prior of an unselectable state") {
  // Two identical states: the second adds no rank, so its entire prior is
  // forfeited no matter how the first is measured.
  Vector plus(2);
  plus << std::sqrt(0.5), std::sqrt(0.5);
  RealVector p(2);
  p << 0.5, 0.5;
  const PureEnsemble e(p, {StateVector(plus), StateVector(plus)});
  const GsoMeasurement g = gso_measurement(e);
  CHECK(g.selected.size() == 1);
  CHECK(gso_error(e) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("greedy prefers the heavier state and keeps ties stable") {
  Vector e0(2), mix(2);
  e0 << 1.0, 0.0;
  mix << std::sqrt(0.5), std::sqrt(0.5);
  RealVector p(2);
  p << 0.2, 0.8;
  const PureEnsemble e(p, {StateVector(e0), StateVector(mix)});
  const GsoMeasurement g = gso_measurement(e);
  REQUIRE(g.selected.size() == 2);
  CHECK(g.selected[0] == 1);  // heavier prior goes first
  // The first selected state is measured without leakage.
  CHECK(std::abs(g.measurement.basis()[1].vec().dot(mix)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("search beats or ties the other methods") {
  Rng rng(223);
  for (int s = 0; s < 6; ++s) {
    const PureEnsemble e = random_ensemble(3, 3, rng);
    const DiscriminationResult best = optimal_vn_search(e);
    CHECK(best.success + 1e-12 >= 1.0 - gso_error(e));
    CHECK(best.success <= 1.0 + 1e-12);
    CHECK(best.converged);
    CHECK(success_probability(e, best.measurement) ==
          doctest::Approx(best.success).epsilon(1e-10));
  }
}

TEST_CASE("search agrees with helstrom on two states") {
  Rng rng(227);
  for (int s = 0; s < 8; ++s) {
    const PureEnsemble e = random_ensemble(2, 2, rng);
    const DiscriminationResult h = helstrom_two(e);
    const DiscriminationResult b = optimal_vn_search(e);
    CHECK(std::abs(h.success - b.success) < 1e-9);
  }
}

TEST_CASE("search is deterministic for a fixed seed") {
  Rng rng(229);
  const PureEnsemble e = random_ensemble(3, 3, rng);
  SearchConfig cfg;
  cfg.seed = 99;
  const DiscriminationResult a = optimal_vn_search(e, cfg);
  const DiscriminationResult b = optimal_vn_search(e, cfg);
  CHECK(a.success == b.success);
  CHECK((a.measurement.as_matrix() - b.measurement.as_matrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("search lifts crowded ensembles into a larger space") {
  Rng rng(233);
  const PureEnsemble e = random_ensemble(4, 3, rng);
  const DiscriminationResult r = optimal_vn_search(e);
  CHECK(r.measurement.dim() == 4);
  CHECK(r.success > 0.25);  // better than guessing the most likely state blind
  CHECK(r.success < 1.0 + 1e-12);
  CHECK(success_probability(e, r.measurement) ==
        doctest::Approx(r.success).epsilon(1e-10));
}

TEST_CASE("exhaustive scan brackets the two-state optimum") {
  Rng rng(239);
  const PureEnsemble e = random_ensemble(2, 2, rng);
  const DiscriminationResult h = helstrom_two(e);
  const BruteforceResult b = bruteforce_vn_d2(e, 600);
  CHECK(b.success <= h.success + 1e-10);
  CHECK(b.success >= h.success - b.resolution_bound - 1e-10);
  CHECK(std::abs(b.success - h.success) < 1e-6);
}

TEST_CASE("the greedy basis rejects ensembles wider than the space") {
  Rng rng(241);
  CHECK_THROWS_AS(gso_measurement(random_ensemble(4, 3, rng)), DimMismatch);
}

}  // TEST_SUITE
