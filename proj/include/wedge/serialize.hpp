#pragma once

// JSON forms of series and count tables. Big integers are decimal strings.

#include <json.hpp>

#include "wedge/series.hpp"
#include "wedge/walks.hpp"

namespace wedge::serialize {

/// {valuation, order, coeffs: [[num, den], ...]}; order is null for exact polynomials.
nlohmann::json to_json(const exact::TSeries& s);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
exact::TSeries series_from_json(const nlohmann::json& j);

/// {model, counts: ["1", "1", "3", ...]}
nlohmann::json to_json(const enumerate::CountTable& table);

}  // namespace wedge::serialize
