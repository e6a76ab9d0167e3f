#pragma once

#include "polyc/mpoly.hpp"

#include <json.hpp>

namespace polyc {

// Wire schema for polynomials:
//   {"space": {"n": N, "blocks": [{"name":"L","count":N}, ...]},
//    "terms": [{"exps": {"l1": 2, ...}, "num": "...", "den": "..."}, ...]}
// Terms appear in canonical monomial order; big integers as decimal strings.
nlohmann::json space_to_json(const VariableSpace& s);
VariableSpace space_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const MPoly& p);
MPoly poly_from_json(const nlohmann::json& j);

} // namespace polyc
