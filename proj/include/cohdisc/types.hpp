#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cohdisc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Shared tolerances, sized for double precision at dimensions up to a few
// hundred.  Validation tolerances are deliberately looser than the
// arithmetic noise floor so that serialized matrices round-trip.
namespace tol {
inline constexpr double herm = 1e-8;        // input Hermiticity
inline constexpr double trace = 1e-8;       // unit trace / prior normalization
inline constexpr double norm = 1e-8;        // state normalization
inline constexpr double psd = 1e-10;        // eigenvalues in [-psd, 0) clip to 0
inline constexpr double eig = 1e-10;        // eigendecomposition residuals
inline constexpr double rank = 1e-8;        // relative numerical-rank cutoff
inline constexpr double zero_prior = 1e-12; // ensemble indices at or below this are dropped
inline constexpr double align = 1e-7;       // Gram equality / alignment residual
inline constexpr double x_pattern = 1e-12;  // off-diagonals at or below this are structural zeros
inline constexpr double cis = 1e-6;         // closest-incoherent-state fidelity residual
inline constexpr double duality = 1e-6;
inline constexpr double xsolver = 1e-6;     // cross-solver disagreement warning threshold
inline constexpr double recovery = 1e-6;
inline constexpr double num = 1e-9;         // generic consistency slack
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NonHermitian : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct NotPsd : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct WrongArity : Error { using Error::Error; };
struct InvalidEnsemble : Error { using Error::Error; };
struct GramMismatch : Error { using Error::Error; };
struct DependentEnsemble : Error { using Error::Error; };
struct InvalidMeasurement : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Density operator: square, Hermitian within tol::herm, positive semidefinite
// down to -tol::psd, unit trace within tol::trace.  The stored matrix is the
// caller's, not a symmetrized copy.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  const Matrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }
  RealVector diagonal() const { return m_.diagonal().real(); }

 private:
  Matrix m_;
};

// Unit vector within tol::norm.
class StateVector {
 public:
  explicit StateVector(Vector v);
  const Vector& vec() const { return v_; }
  Index dim() const { return v_.size(); }

 private:
  Vector v_;
};

}  // namespace cohdisc
