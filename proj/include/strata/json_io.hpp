#pragma once

#include <json.hpp>

#include "strata/coeffring.hpp"
#include "strata/cohring.hpp"
#include "strata/collide.hpp"
#include "strata/degrees.hpp"
#include "strata/strata.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

// Coefficients in increasing powers of d, as decimal strings.
Json to_json(const ParamPoly& p);
ParamPoly param_poly_from_json(const Json& j);
Json to_json(const RatPoly& p);

Json to_json(const VarSpec& v);
VarSpec var_spec_from_json(const Json& j);

// {"ambient": [...], "total_degree": n, "terms": [{"exps": {"X": 2}, "coeff": [...]}, ...]}
Json to_json(const CohClass& c);
CohClass coh_class_from_json(const Json& j);

Json to_json(const StratumClass& s);
Json to_json(const DegreeResult& r);
Json to_json(const NewtonDiagram& n);

}  // namespace strata
