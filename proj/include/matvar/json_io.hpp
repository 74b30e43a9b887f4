#pragma once

#include "json.hpp"
#include <string>

#include "matvar/divisor.hpp"
#include "matvar/verify.hpp"

namespace matvar {

/// {"vertices": int, "edges": [[u,v], ...]}, 0-based.
Graph graph_from_json(const nlohmann::json& j);

/// {"field": "Q" | "GF(p)", "ambient_dim": int, "points": [["a/b", ...], ...]}.
PointConfiguration config_from_json(const nlohmann::json& j);

/// Ascending coefficients as decimal strings (exact at any size).
nlohmann::json polynomial_to_json(const IntPolynomial& p);

/// Elements with id/kind/rank/atoms plus the order relation as a pair list.
nlohmann::json poset_to_json(const ArrangementPoset& p);

/// {"basis": "E"|"H", "coeffs": {id: polynomial}}; zero coefficients omitted.
nlohmann::json divisor_to_json(const DivisorClass& d);

nlohmann::json report_to_json(const IdentityReport& r);

/// The reproducibility block attached to every CLI output.
nlohmann::json metadata_json(const ArrangementPoset& p, int n = -1);

}  // namespace matvar
