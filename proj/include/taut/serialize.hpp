#ifndef TAUT_SERIALIZE_HPP
#define TAUT_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "taut/taut_ring.hpp"

namespace taut {

/// {"genus": g, "grading": {"codim": p, "index": s} | null,
///  "terms": [{"indices": [...], "coeff": "p/q"}, ...]}
/// Terms follow the canonical monomial order; coefficients are always "p/q".
/// When `label` is empty the grading is taken from the polynomial itself
/// (null if it is zero or inhomogeneous).
nlohmann::json to_json(const TautPolynomial& p, std::optional<GradedLabel> label = std::nullopt);

/// Inverse of to_json. Rejects malformed documents with std::invalid_argument.
TautPolynomial taut_polynomial_from_json(const nlohmann::json& j);

/// "C(0)*C(2)" style; repeated factors as powers, e.g. "C(1)^2". Unit is "1".
std::string render_monomial(const TautMonomial& m);

/// "3*C(0)*C(2) + C(1)^2" ; "0" for the zero polynomial.
std::string render_polynomial(const TautPolynomial& p);

/// render_polynomial(p) + " = 0", or "0 = 0 (trivial)" when p is zero.
std::string render_relation(const TautPolynomial& p);

} // namespace taut

#endif // TAUT_SERIALIZE_HPP
