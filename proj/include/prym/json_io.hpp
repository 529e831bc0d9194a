#pragma once

#include <json.hpp>

#include "prym/divisor_class.hpp"

namespace prym {

using Json = nlohmann::ordered_json;

// Coefficients: exact values as "p/q"; (-inf, -b] as {"atLeast": "b"};
// the default bound of an unknown coefficient as "unknown"; anything else as
// {"lo": "p/q" | null, "hi": "p/q" | null, "unknown": bool}.
Json coeff_to_json(const CoeffBound& c, const GeneratorId& gen);
CoeffBound coeff_from_json(const Json& j, const GeneratorId& gen);
// The bound "unknown" stands for: (-inf, 0] on boundary generators (an
// unprinted coefficient of an effective class), unbounded on λ and ψ.
CoeffBound default_unknown(const GeneratorId& gen);

Json space_to_json(const SpaceId& s);
SpaceId space_from_json(const Json& j);

// {"space": {...}, "text": "<class grammar>", "coeffs": {name: coeff}}
Json class_to_json(const DivisorClass& cls);
// Reads "coeffs" when present, else "text".
DivisorClass class_from_json(const Json& j);

}  // namespace prym
