#include "cohdisc/matcore.hpp"

#include <algorithm>
#include <cmath>

namespace cohdisc {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw NotSquare(std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
}

void require_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) throw Error(std::string(who) + ": non-finite entry");
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  require_finite(m_, "DensityMatrix");
  if (!is_hermitian(m_))
    throw NonHermitian("DensityMatrix: not Hermitian within tolerance");
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol::trace)
    throw Error("DensityMatrix: trace is " + std::to_string(tr));
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NoConvergence("DensityMatrix: eigenvalue check did not converge");
  if (es.eigenvalues().minCoeff() < -tol::psd)
    throw NotPsd("DensityMatrix: eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
}

StateVector::StateVector(Vector v) : v_(std::move(v)) {
  if (v_.size() == 0) throw Error("StateVector: empty");
  if (!v_.allFinite()) throw Error("StateVector: non-finite entry");
  if (std::abs(v_.norm() - 1.0) > tol::norm)
    throw Error("StateVector: norm is " + std::to_string(v_.norm()));
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

void fix_phase(Vector& v) {
  Index k = 0;
  double best = 0.0;
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best) { best = a; k = i; }
  }
  if (best <= 0.0) return;
  v *= std::conj(v[k]) / best;
  v[k] = Complex(std::abs(v[k]), 0.0);  // scrub the rounding residue
}

Spectrum eigh(const Matrix& h) {
  require_square(h, "eigh");
  require_finite(h, "eigh");
  if (!is_hermitian(h)) throw NonHermitian("eigh: not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw NoConvergence("eigh: iteration failed");
  Spectrum s{es.eigenvalues(), es.eigenvectors()};
  for (Index c = 0; c < s.eigenvectors.cols(); ++c) {
    Vector col = s.eigenvectors.col(c);
    fix_phase(col);
    s.eigenvectors.col(c) = col;
  }
  return s;
}

Matrix matrix_sqrt(const Matrix& p) {
  Spectrum s = eigh(p);
  RealVector lam = s.eigenvalues;
  for (Index i = 0; i < lam.size(); ++i) {
    if (lam[i] < -tol::psd)
      throw NotPsd("matrix_sqrt: eigenvalue " + std::to_string(lam[i]));
    lam[i] = lam[i] > 0.0 ? std::sqrt(lam[i]) : 0.0;
  }
  Matrix r = s.eigenvectors * lam.asDiagonal() * s.eigenvectors.adjoint();
  return (r + r.adjoint()) / 2.0;
}

double trace_norm(const Matrix& m) {
  require_square(m, "trace_norm");
  require_finite(m, "trace_norm");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw DimMismatch("fidelity: dims " + std::to_string(rho.dim()) + " vs " +
                      std::to_string(sigma.dim()));
  const Matrix s = matrix_sqrt(sigma.matrix());
  Matrix inner = s * rho.matrix() * s;
  inner = (inner + inner.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(inner, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NoConvergence("fidelity: eigensolve failed");
  double root_sum = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i)
    root_sum += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
  return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

Matrix polar_unitary(const Matrix& m) {
  require_square(m, "polar_unitary");
  require_finite(m, "polar_unitary");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix gram(const std::vector<StateVector>& states) {
  const Index n = static_cast<Index>(states.size());
  Matrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    if (states[i].dim() != states[0].dim())
      throw DimMismatch("gram: state dims differ");
    g(i, i) = Complex(1.0, 0.0);
    for (Index j = i + 1; j < n; ++j) {
      const Complex v = states[i].vec().dot(states[j].vec());
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
  }
  return g;
}

RankInfo linear_independence(const std::vector<StateVector>& states,
                             double rank_tolerance) {
  if (states.empty()) return {true, 0};
  const Matrix g = gram(states);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NoConvergence("linear_independence: eigensolve failed");
  const double top = es.eigenvalues().maxCoeff();
  Index rank = 0;
  if (top > 0.0) {
    for (Index i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()[i] > rank_tolerance * top) ++rank;
  }
  return {rank == static_cast<Index>(states.size()), rank};
}

Matrix complete_basis(const Matrix& columns, Index dim) {
  if (columns.rows() != dim && columns.size() != 0)
    throw DimMismatch("complete_basis: column length != dim");
  const Index k = columns.cols();
  if (k > dim) throw DimMismatch("complete_basis: more columns than dim");
  if (k == dim) return columns;
  Matrix padded = Matrix::Zero(dim, dim);
  if (k > 0) padded.leftCols(k) = columns;
  // The polar factor of [C | 0] keeps the orthonormal prefix C exactly and
  // fills the remaining columns from the SVD null-space basis.
  return polar_unitary(padded);
}

}  // namespace cohdisc
