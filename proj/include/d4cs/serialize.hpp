#pragma once

// JSON forms of the exact objects. Keys come out sorted (nlohmann::json
// uses an ordered map), kappa polynomials as canonical strings.

#include "json.hpp"

#include "d4cs/recurrence.hpp"
#include "d4cs/solver.hpp"
#include "d4cs/zpoly.hpp"

namespace d4cs {

using Json = nlohmann::json;

/// {"num": "...", "den": "..."}
Json kappa_to_json(const KappaRational& c);
/// Inverse of kappa_to_json. Throws std::invalid_argument on malformed input.
KappaRational kappa_from_json(const Json& j);

Json weight_to_json(const WeightVector& w);
WeightVector weight_from_json(const Json& j);

/// {"terms": [{"exponents": [...], "num": "...", "den": "..."}, ...]}
/// with terms in ascending exponent order.
Json zpolynomial_to_json(const ZPolynomial& p);
ZPolynomial zpolynomial_from_json(const Json& j);

/// Fixture format: {"m": [...], "epsilon": {...}, "coeffs": [{"mu": [...],
/// "num", "den"}]} listing the nonzero c_mu in (height, mu) order.
Json cspolynomial_to_json(const CSPolynomial& p);
/// Throws std::invalid_argument if a coefficient lies outside the cone.
CSPolynomial cspolynomial_from_json(const Json& j);

/// {"v": 1, "m": [...], "terms": [{"mp": [...], "num", "den"}]}
Json expansion_to_json(const RecurrenceExpansion& x);

}  // namespace d4cs
