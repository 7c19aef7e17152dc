#pragma once

#include <string>

#include "json.hpp"

#include "cohdisc/coherence.hpp"
#include "cohdisc/discrimination.hpp"
#include "cohdisc/ensembles.hpp"
#include "cohdisc/recovery.hpp"
#include "cohdisc/types.hpp"

namespace cohdisc::io {

using json = nlohmann::json;

// Matrix files: {"dim": d, "re": [d*d row-major], "im": [d*d row-major]}.
// "im" may be omitted for real matrices.
Matrix parse_matrix(const json& j);
json matrix_to_json(const Matrix& m);

// Ensemble files: {"priors": [n], "states": [{"re": [d], "im": [d]}, ...]}.
PureEnsemble parse_ensemble(const json& j);
json ensemble_to_json(const PureEnsemble& e);

// Reads and json-parses a file; wraps failures in ParseError with the path.
json load_json(const std::string& path);
Matrix load_matrix(const std::string& path);
PureEnsemble load_ensemble(const std::string& path);

json coherence_to_json(const CoherenceReport& r);
json discrimination_to_json(const DiscriminationResult& r);
json recovery_to_json(const RecoveryResult& r, const RecoveryVerification& v);
json duality_to_json(const DualityReport& r);

}  // namespace cohdisc::io
