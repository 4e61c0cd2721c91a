#pragma once

#include <json.hpp>

#include "inpp/rational_matrix.hpp"

namespace inpp {

/// {"n": int, "entries": [["p/q", ...], ...]}; symmetry is validated on load.
nlohmann::json to_json(const RationalSymMatrix& m);
RationalSymMatrix rational_matrix_from_json(const nlohmann::json& j);

/// Any rectangular rational matrix as {"rows", "cols", "entries"}.
nlohmann::json to_json(const RationalMatrix& m);

}  // namespace inpp
