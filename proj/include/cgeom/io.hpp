#pragma once

// JSON forms: points are arrays of [re, im] pairs in canonical flat order,
// matrices are arrays of rows of [re, im] pairs.

#include <string_view>

#include <json.hpp>

#include "cgeom/automorphisms.hpp"
#include "cgeom/domains.hpp"
#include "cgeom/linalg.hpp"

namespace cgeom {

nlohmann::json complex_to_json(Complex z);
/// Accepts [re, im] or a bare real number; throws ArgumentError otherwise.
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(std::span<const Complex> p);
Point point_from_json(const nlohmann::json& j);
/// Parses JSON text; malformed input throws ArgumentError.
Point parse_point(std::string_view text);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const DomainSpec& spec);
DomainSpec spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AutoV& map);
nlohmann::json to_json(const AutoVI& map);
nlohmann::json to_json(const MobiusI& map);

}  // namespace cgeom
