#include "plausival/json_io.hpp"

#include <map>
#include <string>
#include <utility>

namespace plausival {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(string_of(item, what));
  return out;
}

AtomSpace space_from_json(const json& j) {
  try {
    return AtomSpace(strings_of(j, "atoms"));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json labels_json(const AtomSpace& space) { return space.labels(); }

FiniteSet set_from_json(const json& j, const char* what) {
  return FiniteSet(strings_of(j, what));
}

std::vector<std::pair<ElementId, ElementId>> pairs_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("table must be an object");
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& [key, value] : j.items()) {
    pairs.emplace_back(key, string_of(value, "table value"));
  }
  return pairs;
}

// Table errors in otherwise well-formed JSON are input errors too.
template <typename F>
auto as_parse_error(F&& build) {
  try {
    return build();
  } catch (const DomainMismatch& e) {
    throw ParseError(e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(string_of(j, "rational"));
}

json to_json(const Proposition& a) { return a.labels(); }

Proposition proposition_from_json(const AtomSpace& space, const json& j) {
  return as_parse_error(
      [&] { return Proposition::from_labels(space, strings_of(j, "proposition")); });
}

json to_json(const Unknown& x) {
  json out = json::object();
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[x.space().label(i)] = to_json(x(i));
  }
  return out;
}

Unknown unknown_from_json(const AtomSpace& space, const json& j) {
  if (!j.is_object() || j.size() != space.size()) {
    throw ParseError("unknown must map every atom label to a value");
  }
  Unknown::Values values(static_cast<Eigen::Index>(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    values(static_cast<Eigen::Index>(i)) =
        rational_from_json(field(j, space.label(i).c_str()));
  }
  return Unknown(space, std::move(values));
}

json to_json(const WeightState& state) {
  json out = json::object();
  for (std::size_t i = 0; i < state.space().size(); ++i) {
    out[state.space().label(i)] = to_json(state.weight(i));
  }
  return out;
}

WeightState weight_state_from_json(const AtomSpace& space, const json& j) {
  if (!j.is_object() || j.size() != space.size()) {
    throw ParseError("weights must map every atom label to a value");
  }
  WeightState::Values values(static_cast<Eigen::Index>(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    values(static_cast<Eigen::Index>(i)) =
        rational_from_json(field(j, space.label(i).c_str()));
  }
  return as_parse_error([&] { return WeightState(space, std::move(values)); });
}

json to_json(const PVModel& m) {
  json out{{"atoms", labels_json(m.space())}, {"weights", to_json(m.state())}};
  if (m.world()) out["world"] = m.space().label(m.world()->actual_atom());
  return out;
}

PVModel model_from_json(const json& j) {
  const auto space = space_from_json(field(j, "atoms"));
  auto state = weight_state_from_json(space, field(j, "weights"));
  std::optional<World> world;
  if (j.contains("world")) {
    const auto label = string_of(j.at("world"), "world");
    const auto atom = space.index_of(label);
    if (!atom) throw ParseError("world '" + label + "' is not an atom");
    world.emplace(space, *atom);
  }
  return PVModel(std::move(state), std::move(world));
}

json to_json(const PLTable& t) {
  const auto props = all_propositions(t.space());
  json out = json::array();
  for (Mask b = 1; b < props.size(); ++b) {
    for (Mask a = 0; a < props.size(); ++a) {
      out.push_back({{"given", to_json(props[b])},
                     {"of", to_json(props[a])},
                     {"value", to_json(t.at(a, b))}});
    }
  }
  return out;
}

PLTable pl_table_from_json(const AtomSpace& space, const json& j) {
  if (!j.is_array()) throw ParseError("plausibility table must be an array");
  std::map<std::pair<Mask, Mask>, Rational> entries;
  for (const auto& e : j) {
    const auto b = proposition_from_json(space, field(e, "given")).mask();
    const auto a = proposition_from_json(space, field(e, "of")).mask();
    if (b == 0) throw ParseError("plausibility table conditions on 0");
    if (!entries.emplace(std::pair{a, b}, rational_from_json(field(e, "value")))
             .second) {
      throw ParseError("plausibility table repeats an entry");
    }
  }
  const std::size_t size = std::size_t{1} << space.size();
  if (entries.size() != size * (size - 1)) {
    throw ParseError("plausibility table must cover every (A, B) with B != 0");
  }
  return as_parse_error([&] {
    return PLTable::from_rule(space,
                              [&](Mask a, Mask b) { return entries.at({a, b}); });
  });
}

json to_json(const Triple& t, const AtomSpace& space) {
  return {{"A", to_json(Proposition::from_mask(space, t.a))},
          {"B", to_json(Proposition::from_mask(space, t.b))},
          {"C", to_json(Proposition::from_mask(space, t.c))}};
}

json to_json(const Gluing& g) {
  return {{"atoms", labels_json(g.mu1.space())},
          {"mu1", to_json(g.mu1)},
          {"mu2", to_json(g.mu2)},
          {"second_block", to_json(g.second_block)}};
}

Gluing gluing_from_json(const json& j) {
  const auto space = space_from_json(field(j, "atoms"));
  return Gluing{weight_state_from_json(space, field(j, "mu1")),
                weight_state_from_json(space, field(j, "mu2")),
                proposition_from_json(space, field(j, "second_block"))};
}

json to_json(const UniversalFunction& f) {
  json out = json::array();
  for (const auto& p : f.points()) {
    out.push_back({to_json(f.value(p.x)), to_json(f.value(p.y)), to_json(f.value(p.z))});
  }
  return out;
}

json to_json(const CounterexampleWitness& w, std::size_t max_points) {
  return {{"seed", w.seed},
          {"trial_index", w.trial_index},
          {"table", {{"glued", to_json(w.gluing)}}},
          {"function_points",
           w.function.size() <= max_points ? to_json(w.function) : json(nullptr)},
          {"function_point_count", w.function.size()},
          {"violation",
           {{"associativity", to_json(w.associativity)},
            {"homogeneity", to_json(w.homogeneity)}}}};
}

Retraction retraction_from_json(const json& j) {
  return as_parse_error([&] {
    return Retraction(set_from_json(field(j, "carrier"), "carrier"),
                      set_from_json(field(j, "image"), "image"),
                      pairs_from_json(field(j, "table")));
  });
}

json to_json(const Retraction& p) {
  json table = json::object();
  for (std::size_t t = 0; t < p.carrier().size(); ++t) {
    table[p.carrier()[t]] = p.carrier()[p.apply(t)];
  }
  return {{"carrier", p.carrier().elements()},
          {"image", p.image().elements()},
          {"table", std::move(table)}};
}

FiniteMap finite_map_from_json(const json& j) {
  return as_parse_error([&] {
    return FiniteMap(set_from_json(field(j, "domain"), "domain"),
                     set_from_json(field(j, "codomain"), "codomain"),
                     pairs_from_json(field(j, "table")));
  });
}

json to_json(const FiniteMap& f) {
  json table = json::object();
  for (std::size_t t = 0; t < f.domain().size(); ++t) {
    table[f.domain()[t]] = f.codomain()[f.image_index(t)];
  }
  return {{"domain", f.domain().elements()},
          {"codomain", f.codomain().elements()},
          {"table", std::move(table)}};
}

BinaryMap binary_map_from_json(const json& j) {
  const auto& table = field(j, "table");
  if (!table.is_array()) throw ParseError("binary map table must be an array");
  std::vector<BinaryMap::Entry> entries;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != 3) {
      throw ParseError("binary map rows must be [left, right, value]");
    }
    entries.push_back({string_of(row[0], "left"), string_of(row[1], "right"),
                       string_of(row[2], "value")});
  }
  return as_parse_error([&] {
    return BinaryMap(set_from_json(field(j, "left"), "left"),
                     set_from_json(field(j, "right"), "right"),
                     set_from_json(field(j, "codomain"), "codomain"), entries);
  });
}

json to_json(const BinaryMap& m) {
  json table = json::array();
  for (std::size_t i = 0; i < m.left().size(); ++i) {
    for (std::size_t k = 0; k < m.right().size(); ++k) {
      table.push_back({m.left()[i], m.right()[k], m.codomain()[m.image_index(i, k)]});
    }
  }
  return {{"left", m.left().elements()},
          {"right", m.right().elements()},
          {"codomain", m.codomain().elements()},
          {"table", std::move(table)}};
}

}  // namespace plausival
