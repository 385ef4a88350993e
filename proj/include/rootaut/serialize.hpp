#pragma once

#include <json.hpp>

#include "rootaut/weighted.hpp"

namespace rootaut {

using Json = nlohmann::json;

// Coordinates are [num, den] pairs; integers too wide for 64 bits are
// written as decimal strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"dim": d, "roots": [[[num, den], ...], ...]}
Json to_json(const RootSystem& sys);
// ParameterError on malformed documents, IntegrityError when the roots fail
// validate().
RootSystem root_system_from_json(const Json& j);

// {"word": [...], "perm": [...]}
Json to_json(const WeylElement& w);
// The perm must be the one the word produces; ParameterError otherwise.
WeylElement weyl_element_from_json(const SimpleSystem& ss, const Json& j);

// {"vertices": [{"root": r, "doubled": b}], "edges": [{"a", "b", "bonds", "shorter"}]}
// where "root" is the simple root's index in its system and "shorter" is the
// endpoint the arrow points to or -1.
Json to_json(const DynkinDiagram& dd);
DynkinDiagram diagram_from_json(const Json& j);

// Adds "weight" to every vertex: an integer, or [m, m2] on doubled vertices.
Json to_json(const WeightedDynkinDiagram& wd);
WeightedDynkinDiagram weighted_diagram_from_json(const Json& j);

Json to_json(const DiagramIsomorphism& s);  // the image list
DiagramIsomorphism diagram_isomorphism_from_json(const Json& j);

}  // namespace rootaut
