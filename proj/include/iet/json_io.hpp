#pragma once

#include <json.hpp>

#include "iet/cohomology.hpp"
#include "iet/suspension.hpp"

namespace iet {

using nlohmann::json;

// {"alphabet":[...], "pi0":{"A":1,...}, "pi1":{...}} with 1-based positions.
CombinatorialData combo_from_json(const json& j);
json combo_to_json(const CombinatorialData& c);

// Adds "lengths":{"A":"3/5",...}; rationals serialized as "p/q" strings.
Iem iem_from_json(const json& j);
json iem_to_json(const Iem& t);

// {"A":"1","B":"-1",...}
std::vector<Rational> tau_from_json(const json& j, const CombinatorialData& c);

// {"A":[{"from":"0","to":"1/3","poly":["c0","c1",...]}],...}; piece bounds
// and coefficients are in interval-local coordinates.
PiecewiseFunc phi_from_json(const json& j, const Iem& t);

json diagram_to_json(const RauzyDiagram& dia);
json reduced_to_json(const ReducedDiagram& red);
json roth_to_json(const RothReport& rep);
json solve_to_json(const SolveReport& rep);
json surface_to_json(const SurfaceSummary& s);
json matrix_to_json(const IMat& m);

}  // namespace iet
