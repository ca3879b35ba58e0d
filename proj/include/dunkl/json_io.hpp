#ifndef DUNKL_JSON_IO_HPP
#define DUNKL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "dunkl/polynomial.hpp"

namespace dunkl {

// Interchange format for the CLI and the test fixtures.  Keys keep their
// schema order, so serialized output is byte-deterministic.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"nvars": N, "terms": [{"exp": [...], "coef": ...}, ...]} with terms in
/// descending lexicographic order of "exp".  Constant coefficients are
/// emitted as "p/q" strings, genuine rational functions as num/den
/// coefficient lists in ascending kappa-degree.
Json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const Json& j);

std::string serialize(const Polynomial& f);
/// Inverse of serialize; throws ParseError carrying the byte position for
/// malformed text, -1 for schema violations.
Polynomial parse_polynomial(const std::string& text);

}  // namespace dunkl

#endif
