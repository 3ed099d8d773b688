#pragma once

#include <json.hpp>

#include "relcat/ccategory.hpp"
#include "relcat/quantize.hpp"
#include "relcat/relation.hpp"
#include "relcat/relmonoid.hpp"

namespace relcat {

using nlohmann::json;

// Parsers throw SchemaError on malformed input. Rational matrix entries
// accept integers and "p/q" strings; serialization emits integers when the
// denominator is 1 and "p/q" strings otherwise.

json obj_to_json(const Obj& o);
Obj obj_from_json(const json& j);

json mor_to_json(const Mor& m);
Mor mor_from_json(const json& j);

json comonoid_to_json(const ComonoidData& c);
ComonoidData comonoid_from_json(const json& j);

/// {"c_category": {"ambient":..., "assignments": "canonical" | [...]}}
CCategory ccategory_from_json(const json& j);

/// {"relation": {...}} or {"graph": {"vertices":..., "edges":[[s,d],...]}}
/// Graph vertex names may be strings; they resolve to indices.
Relation relation_from_json(const CCategory& cc, const json& j);
json relation_to_json(const Relation& r);

json bicomodule_to_json(const Bicomodule& b);
Bicomodule bicomodule_from_json(const json& j);

RelMonoid relmonoid_from_json(const CCategory& cc, const json& j);
json relmonoid_to_json(const RelMonoid& m);

/// {"structure": {"ambient":..., overrides...}} with optional top-level
/// "universe" and "generators" siblings.
MonoidalStructure structure_from_json(const json& j);
std::vector<Obj> universe_from_json(Ambient a, const json& j);
std::vector<Mor> generators_from_json(const json& j);

QuantTriple triple_from_json(const json& j);
json triple_to_json(const QuantTriple& t);

MonoidObject monoid_object_from_json(const json& j);
json monoid_object_to_json(const MonoidObject& m);

json report_to_json(const Report& r);

}  // namespace relcat
