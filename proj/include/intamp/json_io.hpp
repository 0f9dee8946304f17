#ifndef INTAMP_JSON_IO_HPP
#define INTAMP_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "intamp/classify.hpp"
#include "intamp/cone.hpp"

namespace intamp::jsonio {

using json = nlohmann::ordered_json;

// ---- input schemas (InputError on violation) ----

Rat rat_from_json(const json& j);
std::vector<Rat> vector_from_json(const json& j);

/** {"rows":2,"cols":2,"entries":["1","-5","1","1"]} */
RatMatrix matrix_from_json(const json& j);

/** {"a":"p/q","b":"p/q","d":-1}; d optional when implied by context. */
QuadElem quad_from_json(const json& j, long d);

/** {"d":-1,"cm":true,"matrix":[[{"a":..,"b":..},..],..]} */
CMEndo cmendo_from_json(const json& j);

/** A CMEndo, a bare matrix, or {"mat":{..},"degree":"36","provenance":".."}. */
EndoAction endo_action_from_json(const json& j);

/** {"dim":2,"generators":[["1","0"],["0","1"]]} */
PolyCone cone_from_json(const json& j);

// ---- output schemas (deterministic key order) ----

json matrix_to_json(const RatMatrix& m);
json profile_to_json(const CircleProfile& p);
json classification_to_json(const ClassificationReport& r);
json composition_to_json(const CompositionReport& r);
json membership_to_json(const MembershipResult& r);
json witness_to_json(const ConeWitnessReport& r);
json degree_bound_to_json(const DegreeBoundReport& r);
json endo_action_to_json(const EndoAction& a);

}  // namespace intamp::jsonio

#endif  // INTAMP_JSON_IO_HPP
