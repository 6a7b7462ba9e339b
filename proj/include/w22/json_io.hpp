#pragma once

#include <vector>

#include "json.hpp"
#include "w22/twist.hpp"
#include "w22/verify.hpp"

namespace w22 {

using Json = nlohmann::json;

// Canonical JSON forms. Term lists follow the PBW map order, so equal values
// serialize to byte-identical JSON.
//   Rational        "p/q"
//   PBWMonomial     [["L", index, exponent], ...]
//   AlgebraElement  [{"coeff": "p/q", "monomial": [...]}, ...]
//   tensors         [{"coeff": "p/q", "monomials": [[...], [...]]}, ...]
//   series          {"order": N, "coeffs": [...]}
Json to_json(const Rational& r);
Json to_json(const PBWMonomial& m);
Json to_json(const AlgebraElement& a);
Json to_json(const Tensor2Element& t);
Json to_json(const Tensor3Element& t);
Json to_json(const AlgebraSeries& s);
Json to_json(const Tensor2Series& s);
Json to_json(const Tensor3Series& s);
Json to_json(const CheckResult& c);
Json to_json(const VerificationReport& r);
Json to_json(const std::vector<VerificationReport>& rs);

// Parsers for the forms above. Throw std::invalid_argument on malformed
// input, including non-canonical factor order inside a monomial.
Rational rational_from_json(const Json& j);
PBWMonomial monomial_from_json(const Json& j);
AlgebraElement element_from_json(const Json& j);
Tensor2Element tensor2_from_json(const Json& j);
Tensor3Element tensor3_from_json(const Json& j);
AlgebraSeries algebra_series_from_json(const Json& j);
Tensor2Series tensor2_series_from_json(const Json& j);
Tensor3Series tensor3_series_from_json(const Json& j);

}  // namespace w22
