#include <cmath>
#include <vector>

#include "doctest.h"

#include "cohdisc/ensembles.hpp"
#include "cohdisc/matcore.hpp"
#include "cohdisc/random.hpp"
#include "cohdisc/types.hpp"

using namespace cohdisc;

namespace {

PureEnsemble angle_pair(double theta) {
  Vector a(2), b(2);
  a << std::cos(theta), std::sin(theta);
  b << std::cos(theta), -std::sin(theta);
  RealVector p(2);
  p << 0.5, 0.5;
  return PureEnsemble(p, {StateVector(a), StateVector(b)});
}

}  // namespace

TEST_SUITE("ensembles") {

TEST_CASE("PureEnsemble validation") {
  Vector e0(2), e1(2);
  e0 << 1.0, 0.0;
  e1 << 0.0, 1.0;
  RealVector bad_sum(2);
  bad_sum << 0.7, 0.7;
  CHECK_THROWS_AS(PureEnsemble(bad_sum, {StateVector(e0), StateVector(e1)}),
                  InvalidEnsemble);

  RealVector negative(2);
  negative << 1.2, -0.2;
  CHECK_THROWS_AS(PureEnsemble(negative, {StateVector(e0), StateVector(e1)}),
                  InvalidEnsemble);

  Vector e3(3);
  e3 << 1.0, 0.0, 0.0;
  RealVector half(2);
  half << 0.5, 0.5;
  CHECK_THROWS_AS(PureEnsemble(half, {StateVector(e0), StateVector(e3)}),
                  InvalidEnsemble);

  RealVector one(1);
  one << 1.0;
  CHECK_THROWS_AS(PureEnsemble(one, {StateVector(e0), StateVector(e1)}),
                  InvalidEnsemble);
}

TEST_CASE("qsd_state of the angle pair is the pinned 2x2") {
  const double theta = std::acos(-1.0) / 8.0;
  const QSDState q = qsd_state(angle_pair(theta));
  const double off = 0.5 * std::cos(2.0 * theta);
  CHECK(q.matrix.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q.matrix.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q.matrix.matrix()(0, 1).real() == doctest::Approx(off).epsilon(1e-14));
  CHECK(q.matrix.matrix()(0, 1).imag() == doctest::Approx(0.0));
}

TEST_CASE("qsd_state carries priors on the diagonal") {
  Rng rng(101);
  const PureEnsemble e = random_ensemble(3, 3, rng);
  const QSDState q = qsd_state(e);
  for (Index i = 0; i < 3; ++i)
    CHECK(q.matrix.matrix()(i, i).real() ==
          doctest::Approx(e.priors()[i]).epsilon(1e-12));
  // Scaling off the priors must hand back the Gram matrix.
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      const double w = std::sqrt(e.priors()[i] * e.priors()[j]);
      CHECK(std::abs(q.matrix.matrix()(i, j) - w * q.source_gram(i, j)) <
            1e-12);
    }
}

TEST_CASE("induced ensemble round-trips a full-rank state") {
  Rng rng(103);
  const DensityMatrix rho = random_density(4, rng, 1e-3);
  const InducedEnsemble ind = induced_ensemble_indexed(rho);
  CHECK(ind.ensemble.size() == 4);
  const QSDState back = qsd_state(ind.ensemble);
  CHECK((back.matrix.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("induced ensemble drops structurally absent rows") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  const InducedEnsemble ind = induced_ensemble_indexed(DensityMatrix(m));
  CHECK(ind.ensemble.size() == 1);
  CHECK(ind.source_indices == std::vector<Index>{0});
  CHECK(std::abs(ind.ensemble.states()[0].vec()[0]) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("induced states keep their native phases") {
  // The reconstruction above only works if the induced states are taken as
  // the sqrt columns, not rephased copies; pin one complex entry.
  Matrix m(2, 2);
  m << 0.5, Complex(0.2, 0.3), Complex(0.2, -0.3), 0.5;
  const DensityMatrix rho(m);
  const Matrix root = matrix_sqrt(rho.matrix());
  const InducedEnsemble ind = induced_ensemble_indexed(rho);
  const Vector expected = root.col(1) / root.col(1).norm();
  CHECK((ind.ensemble.states()[1].vec() - expected).norm() < 1e-12);
}

TEST_CASE("align_unitary undoes a hidden rotation") {
  Rng rng(107);
  std::vector<StateVector> a;
  for (int i = 0; i < 3; ++i) a.push_back(random_state(3, rng));
  const Matrix w = haar_unitary(3, rng);
  std::vector<StateVector> b;
  for (const auto& s : a) b.emplace_back(Vector(w * s.vec()));
  const Matrix u = align_unitary(a, b);
  for (int i = 0; i < 3; ++i)
    CHECK((a[i].vec() - u * b[i].vec()).norm() < 1e-10);
  CHECK((u.adjoint() * u - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("align_unitary conjugate branch") {
  Rng rng(109);
  std::vector<StateVector> a;
  for (int i = 0; i < 2; ++i) a.push_back(random_state(2, rng));
  const Matrix w = haar_unitary(2, rng);
  std::vector<StateVector> b;
  for (const auto& s : a) b.emplace_back(Vector(w * s.vec().conjugate()));
  const Matrix u = align_unitary(a, b, true);
  for (int i = 0; i < 2; ++i)
    CHECK((a[i].vec() - u * b[i].vec().conjugate()).norm() < 1e-10);
}

TEST_CASE("align_unitary refuses mismatched geometry") {
  Vector e0(2), e1(2), mix(2);
  e0 << 1.0, 0.0;
  e1 << 0.0, 1.0;
  mix << std::sqrt(0.5), std::sqrt(0.5);
  // Orthogonal pair against an overlapping pair: different Grams.
  std::vector<StateVector> a{StateVector(e0), StateVector(e1)};
  std::vector<StateVector> b{StateVector(e0), StateVector(mix)};
  CHECK_THROWS_AS(align_unitary(a, b), GramMismatch);
}

TEST_CASE("multicopy gram is the entrywise power") {
  Rng rng(113);
  const PureEnsemble e = random_ensemble(3, 4, rng);
  const QSDState one = multicopy_qsd_state(e, 1);
  const QSDState base = qsd_state(e);
  CHECK((one.matrix.matrix() - base.matrix.matrix()).cwiseAbs().maxCoeff() <
        1e-14);

  const QSDState three = multicopy_qsd_state(e, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      const Complex g = base.source_gram(i, j);
      const Complex expect = std::sqrt(e.priors()[i] * e.priors()[j]) * g * g * g;
      CHECK(std::abs(three.matrix.matrix()(i, j) - expect) < 1e-12);
    }
  CHECK_THROWS_AS(multicopy_qsd_state(e, 0), InvalidEnsemble);
}

TEST_CASE("padding embeds isometrically") {
  Rng rng(127);
  const PureEnsemble e = random_ensemble(2, 2, rng);
  const PureEnsemble padded = pad_ensemble(e, 4);
  CHECK(padded.dim() == 4);
  const Matrix ge = gram(e.states());
  const Matrix gp = gram(padded.states());
  CHECK((ge - gp).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(pad_state(e.states()[0], 1), DimMismatch);
}

}  // TEST_SUITE
