#include "cohdisc/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cohdisc::io {

namespace {

std::vector<double> real_array(const json& j, const std::string& key,
                               std::size_t expect, const std::string& where) {
  if (!j.contains(key))
    throw ParseError(where + ": missing \"" + key + "\"");
  const json& arr = j.at(key);
  if (!arr.is_array() || arr.size() != expect)
    throw ParseError(where + ": \"" + key + "\" must be an array of " +
                     std::to_string(expect) + " numbers");
  std::vector<double> out;
  out.reserve(expect);
  for (std::size_t k = 0; k < expect; ++k) {
    const json& v = arr[k];
    if (!v.is_number())
      throw ParseError(where + ": \"" + key + "\"[" + std::to_string(k) +
                       "] is not a number");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Matrix parse_matrix(const json& j) {
  if (!j.is_object() || !j.contains("dim") ||
      !j.at("dim").is_number_integer())
    throw ParseError("matrix: expected an object with an integer \"dim\"");
  const auto signed_dim = j.at("dim").get<long long>();
  if (signed_dim <= 0) throw ParseError("matrix: dim must be positive");
  const auto dim = static_cast<std::size_t>(signed_dim);
  const std::size_t n = dim * dim;
  const std::vector<double> re = real_array(j, "re", n, "matrix");
  std::vector<double> im(n, 0.0);
  if (j.contains("im")) im = real_array(j, "im", n, "matrix");
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) =
          Complex(re[r * dim + c], im[r * dim + c]);
  return m;
}

json matrix_to_json(const Matrix& m) {
  const Index dim = m.rows();
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(dim * dim));
  im.reserve(static_cast<std::size_t>(dim * dim));
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  return json{{"dim", dim}, {"re", re}, {"im", im}};
}

PureEnsemble parse_ensemble(const json& j) {
  if (!j.is_object() || !j.contains("priors") || !j.contains("states"))
    throw ParseError("ensemble: expected an object with \"priors\" and \"states\"");
  const json& jp = j.at("priors");
  const json& js = j.at("states");
  if (!jp.is_array() || jp.empty())
    throw ParseError("ensemble: \"priors\" must be a nonempty array");
  if (!js.is_array() || js.size() != jp.size())
    throw ParseError("ensemble: \"states\" must match \"priors\" in length");

  const std::size_t n = jp.size();
  RealVector priors(static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!jp[i].is_number())
      throw ParseError("ensemble: priors[" + std::to_string(i) +
                       "] is not a number");
    priors[static_cast<Index>(i)] = jp[i].get<double>();
  }

  std::size_t dim = 0;
  std::vector<StateVector> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "ensemble: states[" + std::to_string(i) + "]";
    const json& st = js[i];
    if (!st.is_object() || !st.contains("re"))
      throw ParseError(where + " must be an object with \"re\"");
    if (i == 0) {
      dim = st.at("re").is_array() ? st.at("re").size() : 0;
      if (dim == 0) throw ParseError(where + ": \"re\" must be a nonempty array");
    }
    const std::vector<double> re = real_array(st, "re", dim, where);
    std::vector<double> im(dim, 0.0);
    if (st.contains("im")) im = real_array(st, "im", dim, where);
    Vector v(static_cast<Index>(dim));
    for (std::size_t k = 0; k < dim; ++k)
      v[static_cast<Index>(k)] = Complex(re[k], im[k]);
    try {
      states.emplace_back(std::move(v));
    } catch (const Error& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  try {
    return PureEnsemble(std::move(priors), std::move(states));
  } catch (const Error& err) {
    throw ParseError(std::string("ensemble: ") + err.what());
  }
}

json ensemble_to_json(const PureEnsemble& e) {
  json states = json::array();
  for (const auto& s : e.states()) {
    std::vector<double> re, im;
    re.reserve(static_cast<std::size_t>(s.dim()));
    im.reserve(static_cast<std::size_t>(s.dim()));
    for (Index k = 0; k < s.dim(); ++k) {
      re.push_back(s.vec()[k].real());
      im.push_back(s.vec()[k].imag());
    }
    states.push_back(json{{"re", re}, {"im", im}});
  }
  std::vector<double> priors(e.priors().data(), e.priors().data() + e.size());
  return json{{"priors", priors}, {"states", states}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& err) {
    throw ParseError(path + ": " + err.what());
  }
}

Matrix load_matrix(const std::string& path) {
  try {
    return parse_matrix(load_json(path));
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

PureEnsemble load_ensemble(const std::string& path) {
  try {
    return parse_ensemble(load_json(path));
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

namespace {

json bounds_to_json(const CoherenceBounds& b) {
  json out{{"l1", b.l1}, {"l2", b.l2}, {"l3", b.l3}};
  if (b.l4) out["l4"] = *b.l4;
  return out;
}

json measurement_to_json(const VonNeumannMeasurement& m) {
  return matrix_to_json(m.as_matrix());
}

}  // namespace

json coherence_to_json(const CoherenceReport& r) {
  return json{{"c_g", r.c_g},
              {"cis", matrix_to_json(r.cis.matrix())},
              {"method", r.method_tag},
              {"bounds", bounds_to_json(r.bounds)},
              {"solver_gap", r.solver_gap},
              {"iterations", r.iterations},
              {"restarts_used", r.restarts_used},
              {"warnings", r.warnings}};
}

json discrimination_to_json(const DiscriminationResult& r) {
  return json{{"success", r.success},
              {"error", r.error},
              {"measurement", measurement_to_json(r.measurement)},
              {"method", r.method_tag},
              {"iterations", r.iterations},
              {"restarts_used", r.restarts_used},
              {"converged", r.converged}};
}

json recovery_to_json(const RecoveryResult& r, const RecoveryVerification& v) {
  std::vector<double> cert(r.certificate.data(),
                           r.certificate.data() + r.certificate.size());
  return json{{"success", r.success},
              {"error", 1.0 - r.success},
              {"measurement", measurement_to_json(r.measurement)},
              {"alignment", matrix_to_json(r.alignment)},
              {"certificate", cert},
              {"qsd_coherence", r.qsd_coherence},
              {"consistency", r.consistency},
              {"iterations", r.iterations},
              {"restarts_used", r.restarts_used},
              {"verification",
               json{{"independent", v.independent},
                    {"success_consistent", v.success_consistent},
                    {"measurement_orthonormal", v.measurement_orthonormal},
                    {"error_equals_qsd_coherence", v.error_equals_qsd_coherence},
                    {"qsd_matches_ensemble", v.qsd_matches_ensemble},
                    {"alignment_unitary", v.alignment_unitary},
                    {"ok", v.ok},
                    {"worst_residual", v.worst_residual}}}};
}

json duality_to_json(const DualityReport& r) {
  return json{{"c_g", r.c_g}, {"d_q", r.d_q}, {"sum", r.sum}};
}

}  // namespace cohdisc::io
