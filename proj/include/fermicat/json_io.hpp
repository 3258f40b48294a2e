#pragma once

#include <string>

#include "fermicat/morphism.hpp"
#include "fermicat/verify.hpp"

namespace fermicat {

// Stable-schema JSON for a normal form:
// {
//   "bottom": "-+", "top": "-+", "source": 0 | 1 | null,
//   "terms": [ { "coeff": "p/q",
//                "arcs": [[["bottom",1],["top",1]], ...],
//                "bubbles": {"cw": k, "ccw": m} }, ... ]
// }
// Endpoint positions are 1-based; key order is fixed, so equal inputs give
// byte-identical output.
std::string morphism_to_json(const Morphism& morphism);

// Stable-schema JSON for a verification report:
// { "n": n, "checks": [ {"name": ..., "pass": bool, "detail": ...}, ... ] }
std::string report_to_json(const Report& report);

}  // namespace fermicat
