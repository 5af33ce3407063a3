#pragma once

// JSON forms of every public type.
//
//   Scalar      symbolic: {"num": [c0, c1, ...], "den": [d0, ...]} ascending
//               q-powers (coefficients as JSON integers, or decimal strings
//               when outside the 64-bit range); numeric: {"rat": "p/r"}.
//   Element     {"terms": [{"n": int, "m": int, "c": Scalar}]}, sorted.
//   Morphism    {"word": [{"theta": r} | {"phi_alpha": AlphaSeq} |
//                         {"phi_beta": {"s": int, "beta": BetaSeq}}]}.
//   Field       {"mode": "symbolic"} or {"mode": "numeric", "q": "p/r"}.
//
// Scalars deserialize against the configured field mode; a payload of the
// other mode is rejected.

#include "hq/element.hpp"
#include "hq/group.hpp"
#include "hq/tabulated.hpp"

#include <json.hpp>

namespace hq {

using json = nlohmann::json;

void to_json(json& j, const Scalar& s);
void from_json(const json& j, Scalar& s);

void to_json(json& j, const Window& w);
void from_json(const json& j, Window& w);

void to_json(json& j, const Element& e);
void from_json(const json& j, Element& e);

void to_json(json& j, const TensorElement& t);
void from_json(const json& j, TensorElement& t);

void to_json(json& j, const BetaSeq& b);
void from_json(const json& j, BetaSeq& b);

void to_json(json& j, const AlphaSeq& a);
void from_json(const json& j, AlphaSeq& a);

void to_json(json& j, const BetaTower& t);
void from_json(const json& j, BetaTower& t);

void to_json(json& j, const SemidirectElt& e);
void from_json(const json& j, SemidirectElt& e);

void to_json(json& j, const Morphism& m);
void from_json(const json& j, Morphism& m);

void to_json(json& j, const TabulatedMorphism& t);
void from_json(const json& j, TabulatedMorphism& t);

void to_json(json& j, const DecompositionResult& d);
void from_json(const json& j, DecompositionResult& d);

void to_json(json& j, const CoalgebraReport& r);

void to_json(json& j, const FieldConfig& c);
void from_json(const json& j, FieldConfig& c);

} // namespace hq
