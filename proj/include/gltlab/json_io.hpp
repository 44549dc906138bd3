#pragma once
//
// Project     : gltlab
// Module      : json_io
// Description : JSON views of symbols and reports; the symbol schema is
//               shared with the experiment configs
//

#include "gltlab/acs.hpp"
#include "gltlab/clustering.hpp"
#include "gltlab/distribution.hpp"
#include "gltlab/precond.hpp"
#include "gltlab/symbol.hpp"

#include <json.hpp>

namespace gltlab {

using Json = nlohmann::ordered_json;

// trig polynomial: {"coeffs": {"k": [re, im] | re, ...}}
Json     trig_poly_to_json(const TrigPoly& f);
TrigPoly trig_poly_from_json(const Json& j, const std::string& context);

// symbol tree: atoms {"a": "<expression>", "f": {"coeffs": ...}}, nodes
// {"op": "add"|"mul", "args": [...]} | {"op": "conj", "arg": ...} |
// {"op": "scale", "factor": [re, im] | re, "arg": ...}
Json       symbol_to_json(const SymbolExpr& s);
SymbolExpr symbol_from_json(const Json& j, const std::string& context);

Complex complex_from_json(const Json& j, const std::string& context);
Json    complex_to_json(Complex c);

Json to_json(const SeminormEstimate& e);
Json to_json(const ClusterReport& r);
Json to_json(const DistributionReport& r);
Json to_json(const IsometryRecord& rec);
Json to_json(const KorovkinEntry& entry);
Json to_json(const PrecondReport& rep);

}  // namespace gltlab
