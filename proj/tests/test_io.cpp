#include <string>

#include "doctest.h"

#include "cohdisc/io.hpp"
#include "cohdisc/random.hpp"
#include "cohdisc/types.hpp"

using namespace cohdisc;
using cohdisc::io::json;

TEST_SUITE("io") {

TEST_CASE("matrix json round trip is exact") {
  Rng rng(501);
  const Matrix m = random_complex_matrix(3, 3, rng);
  const Matrix back = io::parse_matrix(io::matrix_to_json(m));
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);

  // Exactness must survive serialization to text, not just the json tree.
  const json reparsed = json::parse(io::matrix_to_json(m).dump());
  const Matrix textback = io::parse_matrix(reparsed);
  CHECK((textback - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix parsing accepts a missing imaginary part") {
  const json j{{"dim", 2}, {"re", {1.0, 2.0, 3.0, 4.0}}};
  const Matrix m = io::parse_matrix(j);
  CHECK(m(0, 1).real() == 2.0);
  CHECK(m(1, 0).imag() == 0.0);
}

TEST_CASE("matrix parsing rejects malformed input") {
  CHECK_THROWS_AS(io::parse_matrix(json::array()), ParseError);
  CHECK_THROWS_AS(io::parse_matrix(json{{"re", {1.0}}}), ParseError);
  CHECK_THROWS_AS(io::parse_matrix(json{{"dim", 0}, {"re", json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(io::parse_matrix(json{{"dim", 2}, {"re", {1.0, 2.0}}}),
                  ParseError);
  CHECK_THROWS_AS(
      io::parse_matrix(json{{"dim", 2},
                            {"re", {1.0, 0.0, 0.0, 1.0}},
                            {"im", {0.0, "x", 0.0, 0.0}}}),
      ParseError);
}

TEST_CASE("ensemble json round trip") {
  Rng rng(503);
  const PureEnsemble e = random_ensemble(3, 2, rng);
  const PureEnsemble back = io::parse_ensemble(io::ensemble_to_json(e));
  CHECK(back.size() == e.size());
  CHECK((back.priors() - e.priors()).cwiseAbs().maxCoeff() == 0.0);
  for (Index i = 0; i < e.size(); ++i)
    CHECK((back.states()[i].vec() - e.states()[i].vec()).norm() == 0.0);
}

TEST_CASE("ensemble parsing points at the broken entry") {
  const json missing_states{{"priors", {0.5, 0.5}}};
  CHECK_THROWS_AS(io::parse_ensemble(missing_states), ParseError);

  const json short_state{
      {"priors", {0.5, 0.5}},
      {"states",
       {json{{"re", {1.0, 0.0}}}, json{{"re", {1.0}}}}}};
  CHECK_THROWS_WITH_AS(io::parse_ensemble(short_state),
                       doctest::Contains("states[1]"), ParseError);

  const json unnormalized{
      {"priors", {0.5, 0.5}},
      {"states",
       {json{{"re", {1.0, 0.0}}}, json{{"re", {2.0, 0.0}}}}}};
  CHECK_THROWS_AS(io::parse_ensemble(unnormalized), ParseError);

  const json bad_priors{
      {"priors", {0.9, 0.9}},
      {"states",
       {json{{"re", {1.0, 0.0}}}, json{{"re", {0.0, 1.0}}}}}};
  CHECK_THROWS_AS(io::parse_ensemble(bad_priors), ParseError);
}

TEST_CASE("load_json reports unreadable paths") {
  CHECK_THROWS_AS(io::load_json("/nonexistent/path.json"), ParseError);
}

}  // TEST_SUITE
