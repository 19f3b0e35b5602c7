#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "filiaut/algebra.hpp"
#include "filiaut/automorphism.hpp"
#include "filiaut/local.hpp"
#include "filiaut/twolocal.hpp"

namespace filiaut {

using Json = nlohmann::json;

// Raised by every *_from_json reader on structurally bad input; the CLI maps
// it (and json parse errors) to the malformed-input exit code.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Rationals travel as strings "p/q", with "/q" dropped for integers, so
// values stay exact no matter who reads the report.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Cplx& z);

Json to_json(const RVector& v);
RVector rvector_from_json(const Json& j);
Json to_json(const RMatrix& m);
RMatrix rmatrix_from_json(const Json& j);
Json to_json(const CVector& v);
Json to_json(const CMatrix& m);

// Either {"family": ..., "n": ...} or {"custom": true, "n": ...,
// "table": [[i, j, k, "c"], ...]} with 1-based basis indices.
Json to_json(const Algebra& alg);
Algebra algebra_from_json(const Json& j);

Json to_json(const AutParams<Rational>& p);
Json to_json(const AutParams<Cplx>& p);
AutParams<Rational> params_from_json(const Json& j);

Json to_json(const PointMap& pm);
PointMap pointmap_from_json(const Json& j);

Json to_json(const WitnessOutcome& w);
Json to_json(const LocalCheck& lc);
Json to_json(const SurveyReport& rep);
Json to_json(const PowerProfile& prof);

}  // namespace filiaut
