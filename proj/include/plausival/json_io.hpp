#pragma once

// JSON forms of the model objects. Rationals travel as canonical "p/q"
// strings, propositions as lists of atom labels in atom order, unknowns as
// label -> "p/q" objects.

#include "plausival/boolean_algebra.hpp"
#include "plausival/cox_lab.hpp"
#include "plausival/plausible_value.hpp"
#include "plausival/rational.hpp"
#include "plausival/retraction.hpp"
#include "plausival/unknowns.hpp"

#include <nlohmann/json.hpp>

namespace plausival {

using nlohmann::json;

// All *_from_json functions throw ParseError on malformed input.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Proposition& a);
Proposition proposition_from_json(const AtomSpace& space, const json& j);

json to_json(const Unknown& x);
Unknown unknown_from_json(const AtomSpace& space, const json& j);

json to_json(const WeightState& state);
WeightState weight_state_from_json(const AtomSpace& space, const json& j);

/// {"atoms": [...], "weights": {label: "p/q"}, "world": label?}
json to_json(const PVModel& m);
PVModel model_from_json(const json& j);

/// [{"given": [...], "of": [...], "value": "p/q"}, ...] over E x E_0.
json to_json(const PLTable& t);
PLTable pl_table_from_json(const AtomSpace& space, const json& j);

json to_json(const Triple& t, const AtomSpace& space);

/// {"atoms", "mu1", "mu2", "second_block"}: the generator of a glued table.
json to_json(const Gluing& g);
Gluing gluing_from_json(const json& j);

/// [[x, y, F(x,y)], ...] in point order.
json to_json(const UniversalFunction& f);

/// {"seed", "trial_index", "table": {"glued": gluing}, "function_points",
/// "function_point_count", "violation": {"associativity", "homogeneity"}}.
/// The glued table itself is stored as its generator; function_points is
/// null when F has more than max_points points.
json to_json(const CounterexampleWitness& w, std::size_t max_points = 100000);

/// {"carrier": [...], "image": [...], "table": {t: P(t)}}
Retraction retraction_from_json(const json& j);
json to_json(const Retraction& p);
/// {"domain": [...], "codomain": [...], "table": {t: f(t)}}
FiniteMap finite_map_from_json(const json& j);
json to_json(const FiniteMap& f);
/// {"left": [...], "right": [...], "codomain": [...], "table": [[t1, t2, v]]}
BinaryMap binary_map_from_json(const json& j);
json to_json(const BinaryMap& m);

}  // namespace plausival
