#include "cohdisc/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "cohdisc/matcore.hpp"
#include "cohdisc/random.hpp"

namespace cohdisc {

VonNeumannMeasurement::VonNeumannMeasurement(std::vector<StateVector> basis)
    : basis_(std::move(basis)) {
  if (basis_.empty()) throw InvalidMeasurement("VonNeumannMeasurement: empty");
  const Index d = basis_.front().dim();
  if (static_cast<Index>(basis_.size()) != d)
    throw InvalidMeasurement("VonNeumannMeasurement: " + std::to_string(basis_.size()) +
                             " vectors in dim " + std::to_string(d));
  for (Index i = 0; i < d; ++i) {
    if (basis_[i].dim() != d) throw InvalidMeasurement("VonNeumannMeasurement: mixed dims");
    for (Index j = i + 1; j < d; ++j)
      if (std::abs(basis_[i].vec().dot(basis_[j].vec())) > 1e-8)
        throw InvalidMeasurement("VonNeumannMeasurement: vectors " + std::to_string(i) +
                                 "," + std::to_string(j) + " not orthogonal");
  }
}

VonNeumannMeasurement VonNeumannMeasurement::from_columns(const Matrix& u) {
  std::vector<StateVector> basis;
  basis.reserve(u.cols());
  for (Index c = 0; c < u.cols(); ++c) basis.emplace_back(Vector(u.col(c)));
  return VonNeumannMeasurement(std::move(basis));
}

Matrix VonNeumannMeasurement::as_matrix() const {
  const Index d = dim();
  Matrix m(d, d);
  for (Index c = 0; c < d; ++c) m.col(c) = basis_[c].vec();
  return m;
}

double success_probability(const PureEnsemble& e, const VonNeumannMeasurement& m) {
  if (m.dim() < e.dim())
    throw DimMismatch("success_probability: measurement dim " + std::to_string(m.dim()) +
                      " below ensemble dim " + std::to_string(e.dim()));
  if (e.size() > m.dim())
    throw DimMismatch("success_probability: more states than outcomes");
  double s = 0.0;
  for (Index i = 0; i < e.size(); ++i) {
    const Complex amp = m.basis()[i].vec().head(e.dim()).dot(e.states()[i].vec());
    s += e.priors()[i] * std::norm(amp);
  }
  return std::clamp(s, 0.0, 1.0);
}

DiscriminationResult helstrom_two(const PureEnsemble& ensemble) {
  if (ensemble.size() != 2)
    throw WrongArity("helstrom_two: needs exactly 2 states, got " +
                     std::to_string(ensemble.size()));
  // Two outcomes need at least two dimensions.
  const PureEnsemble e = ensemble.dim() >= 2 ? ensemble : pad_ensemble(ensemble, 2);
  const Index d = e.dim();
  const Vector& s1 = e.states()[0].vec();
  const Vector& s2 = e.states()[1].vec();
  const Matrix delta = e.priors()[0] * (s1 * s1.adjoint()) - e.priors()[1] * (s2 * s2.adjoint());
  const Spectrum sp = eigh(delta);
  const double success = 0.5 * (1.0 + sp.eigenvalues.cwiseAbs().sum());

  // Positive eigenvector answers "state 1", negative answers "state 2"; a
  // missing side (parallel states) keeps whatever identifies the other.
  Matrix cols(d, 0);
  const bool has_pos = sp.eigenvalues[d - 1] > tol::psd;
  const bool has_neg = sp.eigenvalues[0] < -tol::psd;
  if (has_pos && has_neg) {
    cols.resize(d, 2);
    cols.col(0) = sp.eigenvectors.col(d - 1);
    cols.col(1) = sp.eigenvectors.col(0);
  } else if (has_pos) {
    cols.resize(d, 1);
    cols.col(0) = sp.eigenvectors.col(d - 1);
  } else if (has_neg) {
    // No measurement vector earns outcome 1; park it orthogonal to state 2.
    const Matrix rest = complete_basis(sp.eigenvectors.col(0), d);
    cols.resize(d, 2);
    cols.col(0) = rest.col(1);
    cols.col(1) = sp.eigenvectors.col(0);
  } else {
    // Identical states with equal priors: any basis scores 1/2.
    cols.resize(d, 1);
    cols.col(0) = s1;
  }
  const Matrix full = complete_basis(cols, d);
  DiscriminationResult r{success, 1.0 - success,
                         VonNeumannMeasurement::from_columns(full), "helstrom", 0, 0, true};
  return r;
}

namespace {

struct GsoInternal {
  Matrix ortho;                   // orthonormalized selected states, selection order
  std::vector<Index> selected;    // original indices, selection order
  std::vector<Index> order;       // all indices, descending-prior order
};

GsoInternal gso_select(const PureEnsemble& e) {
  const Index n = e.size();
  const Index d = e.dim();
  GsoInternal g;
  g.order.resize(n);
  std::iota(g.order.begin(), g.order.end(), Index{0});
  std::stable_sort(g.order.begin(), g.order.end(), [&](Index a, Index b) {
    return e.priors()[a] > e.priors()[b];
  });
  g.ortho.resize(d, 0);
  for (Index idx : g.order) {
    if (g.ortho.cols() == d) break;
    Vector r = e.states()[idx].vec();
    for (int pass = 0; pass < 2; ++pass)
      r -= g.ortho * (g.ortho.adjoint() * r);
    if (r.squaredNorm() > tol::rank) {
      g.ortho.conservativeResize(d, g.ortho.cols() + 1);
      g.ortho.col(g.ortho.cols() - 1) = r / r.norm();
      g.selected.push_back(idx);
    }
  }
  return g;
}

}  // namespace

GsoMeasurement gso_measurement(const PureEnsemble& e) {
  const Index n = e.size();
  const Index d = e.dim();
  if (n > d) throw DimMismatch("gso_measurement: more states than dimensions");
  GsoInternal g = gso_select(e);
  const Matrix full = complete_basis(g.ortho, d);
  const Index picked = static_cast<Index>(g.selected.size());

  // Position i of the basis targets state i; completion vectors fill the
  // positions of non-selected states, then the null outcomes past n.
  std::vector<Index> slot_of_state(n, -1);
  for (Index k = 0; k < picked; ++k) slot_of_state[g.selected[k]] = k;
  Matrix arranged(d, d);
  Index next_completion = picked;
  for (Index i = 0; i < n; ++i)
    arranged.col(i) = slot_of_state[i] >= 0 ? full.col(slot_of_state[i])
                                            : full.col(next_completion++);
  for (Index i = n; i < d; ++i) arranged.col(i) = full.col(next_completion++);
  return {VonNeumannMeasurement::from_columns(arranged), std::move(g.selected)};
}

double gso_error(const PureEnsemble& e) {
  GsoInternal g = gso_select(e);
  const Index picked = static_cast<Index>(g.selected.size());
  double err = 0.0;
  for (Index k = 0; k < picked; ++k) {
    const Index idx = g.selected[k];
    for (Index j = 0; j < k; ++j)
      err += e.priors()[idx] * std::norm(g.ortho.col(j).dot(e.states()[idx].vec()));
  }
  std::vector<bool> is_selected(e.size(), false);
  for (Index idx : g.selected) is_selected[idx] = true;
  for (Index i = 0; i < e.size(); ++i)
    if (!is_selected[i]) err += e.priors()[i];
  return std::clamp(err, 0.0, 1.0);
}

namespace {

double vn_objective(const Matrix& f, const Matrix& weighted) {
  double s = 0.0;
  for (Index i = 0; i < weighted.cols(); ++i)
    s += std::norm(f.col(i).dot(weighted.col(i)));
  return s;
}

}  // namespace

DiscriminationResult optimal_vn_search(const PureEnsemble& e, const SearchConfig& config) {
  const Index n = e.size();
  const Index dim = std::max(n, e.dim());
  Matrix weighted = Matrix::Zero(dim, n);
  for (Index i = 0; i < n; ++i)
    weighted.col(i).head(e.dim()) = std::sqrt(e.priors()[i]) * e.states()[i].vec();

  const PureEnsemble lifted = dim == e.dim() ? e : pad_ensemble(e, dim);
  const Matrix warm = gso_measurement(lifted).measurement.as_matrix();

  // Ascent step: with c_i = <f_i|a_i> the surrogate sum_i Re(conj(c_i)<f_i|a_i>)
  // minorizes the objective and is maximized over unitaries by the polar
  // factor of the matrix whose column i is a_i conj(c_i).  The objective is
  // therefore non-decreasing along the iteration.
  struct Best {
    double value = -1.0;
    Matrix basis;
    int iterations = 0;
    bool converged = false;
  } best;
  int starts_run = 0;
  for (int start = 0; start <= config.restarts; ++start) {
    Matrix f;
    if (start == 0) {
      f = warm;
    } else {
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(start)));
      f = haar_unitary(dim, rng);
    }
    double value = vn_objective(f, weighted);
    bool converged = false;
    int it = 0;
    while (it < config.max_iters) {
      ++it;
      Matrix b = Matrix::Zero(dim, dim);
      for (Index i = 0; i < n; ++i)
        b.col(i) = weighted.col(i) * std::conj(f.col(i).dot(weighted.col(i)));
      f = polar_unitary(b);
      const double next = vn_objective(f, weighted);
      const double gain = next - value;
      value = next;
      if (gain < config.tol_opt) { converged = true; break; }
    }
    ++starts_run;
    if (value > best.value) best = {value, f, it, converged};
  }
  if (!best.converged)
    throw NoConvergence("optimal_vn_search: best restart still ascending after " +
                        std::to_string(config.max_iters) + " iterations");
  const double success = std::clamp(best.value, 0.0, 1.0);
  return {success, 1.0 - success, VonNeumannMeasurement::from_columns(best.basis),
          "search", best.iterations, starts_run, true};
}

BruteforceResult bruteforce_vn_d2(const PureEnsemble& e, int grid_n) {
  if (e.dim() != 2) throw DimMismatch("bruteforce_vn_d2: dim must be 2");
  if (e.size() > 2) throw DimMismatch("bruteforce_vn_d2: more states than outcomes");
  if (grid_n < 2) throw Error("bruteforce_vn_d2: grid_n too small");

  const Complex a = e.states()[0].vec()[0], b = e.states()[0].vec()[1];
  const double w1 = e.priors()[0];
  const bool two = e.size() == 2;
  const Complex c = two ? e.states()[1].vec()[0] : Complex(0, 0);
  const Complex d = two ? e.states()[1].vec()[1] : Complex(0, 0);
  const double w2 = two ? e.priors()[1] : 0.0;

  // On this family the objective is s(t, phi) = base(t) + Re(z(t) e^{-i phi}):
  // the phi dependence is a single harmonic, which keeps the inner scan to two
  // multiplies per grid point.
  const auto base_of = [&](double ct, double st) {
    return w1 * (ct * ct * std::norm(a) + st * st * std::norm(b)) +
           w2 * (st * st * std::norm(c) + ct * ct * std::norm(d));
  };
  const auto z_of = [&](double ct, double st) {
    return 2.0 * ct * st * (w1 * std::conj(a) * b - w2 * std::conj(c) * d);
  };
  const auto eval = [&](double t, double phi) {
    const double ct = std::cos(t), st = std::sin(t);
    const Complex z = z_of(ct, st);
    return base_of(ct, st) + z.real() * std::cos(phi) + z.imag() * std::sin(phi);
  };

  std::vector<double> cp(grid_n), sp(grid_n);
  for (int k = 0; k < grid_n; ++k) {
    const double phi = 2.0 * M_PI * k / grid_n;
    cp[k] = std::cos(phi);
    sp[k] = std::sin(phi);
  }
  double best_v = -1.0, best_t = 0.0, best_p = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double t = (M_PI / 2.0) * i / (grid_n - 1);
    const double ct = std::cos(t), st = std::sin(t);
    const double base = base_of(ct, st);
    const Complex z = z_of(ct, st);
    for (int k = 0; k < grid_n; ++k) {
      const double v = base + z.real() * cp[k] + z.imag() * sp[k];
      if (v > best_v) { best_v = v; best_t = t; best_p = 2.0 * M_PI * k / grid_n; }
    }
  }

  // Local refinement sharpens the reported value; it can only raise it, so
  // the coarse-grid guarantee below stays valid.
  double wt = (M_PI / 2.0) / (grid_n - 1);
  double wp = 2.0 * M_PI / grid_n;
  for (int round = 0; round < 8; ++round) {
    const double t0 = best_t, p0 = best_p;
    for (int i = 0; i <= 32; ++i)
      for (int k = 0; k <= 32; ++k) {
        const double t = t0 + wt * (i / 16.0 - 1.0);
        const double phi = p0 + wp * (k / 16.0 - 1.0);
        const double v = eval(t, phi);
        if (v > best_v) { best_v = v; best_t = t; best_p = phi; }
      }
    wt /= 8.0;
    wp /= 8.0;
  }

  // Every grid point evaluates a genuine basis, so the reported value is a
  // lower bound on the optimum.  The optimum sits within half a coarse cell
  // of some grid point; the gradient vanishes there (the t endpoints lie on
  // the grid), and |d2s/dt2| <= 6, |d2s/dphi2| <= 1/2 on the family, so the
  // second-order remainder bounds the gap.
  const double dt = 0.5 * (M_PI / 2.0) / (grid_n - 1);
  const double dp = 0.5 * (2.0 * M_PI) / grid_n;
  const double bound = 3.0 * dt * dt + 0.25 * dp * dp;
  return {std::clamp(best_v, 0.0, 1.0), bound};
}

}  // namespace cohdisc
