#include "plausival/json_io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace plausival;
using namespace plausival::test;

TEST_SUITE("json_io") {

TEST_CASE("rationals travel as canonical text") {
  CHECK(to_json(q(-6, 4)) == "-3/2");
  CHECK(rational_from_json(json("4/6")) == q(2, 3));
  CHECK(rational_from_json(json(5)) == q(5));
  CHECK_THROWS_AS(rational_from_json(json(0.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), ParseError);
}

TEST_CASE("propositions and unknowns") {
  const auto s = AtomSpace::numbered(3);
  const auto a = Proposition::of(s, {2, 0});
  CHECK(to_json(a) == json({"a1", "a3"}));
  CHECK(proposition_from_json(s, json({"a3", "a1"})) == a);
  CHECK_THROWS_AS(proposition_from_json(s, json({"a4"})), ParseError);
  CHECK_THROWS_AS(proposition_from_json(s, json("a1")), ParseError);

  const auto x = unknown(s, {q(1, 2), 0, -3});
  const auto j = to_json(x);
  CHECK(j == json({{"a1", "1/2"}, {"a2", "0/1"}, {"a3", "-3/1"}}));
  CHECK(unknown_from_json(s, j) == x);
  CHECK_THROWS_AS(unknown_from_json(s, json({{"a1", "1/2"}})), ParseError);
}

TEST_CASE("models round trip") {
  const auto s = AtomSpace::numbered(3);
  WeightState::Values w(3);
  w << Rational(1), Rational(5, 2), Rational(3);
  const PVModel m(WeightState(s, w), World(s, 1));
  const auto j = to_json(m);
  CHECK(j["world"] == "a2");
  const auto back = model_from_json(j);
  CHECK(back.state() == m.state());
  REQUIRE(back.world());
  CHECK(back.world()->actual_atom() == 1);
  CHECK(model_from_json(to_json(back)).state() == m.state());

  auto bad = j;
  bad["weights"]["a1"] = "0/1";
  CHECK_THROWS_AS(model_from_json(bad), ParseError);
  bad = j;
  bad["world"] = "a7";
  CHECK_THROWS_AS(model_from_json(bad), ParseError);
  bad = j;
  bad.erase("atoms");
  CHECK_THROWS_AS(model_from_json(bad), ParseError);
  CHECK_THROWS_AS(model_from_json(json({{"atoms", {"a", "a"}}, {"weights", json::object()}})),
                  ParseError);
}

TEST_CASE("plausibility tables round trip") {
  const auto t = pl_table(model({1, 2, 3}));
  const auto j = to_json(t);
  CHECK(j.size() == t.entry_count());
  const auto back = pl_table_from_json(t.space(), j);
  for (Mask b = 1; b < 8; ++b) {
    for (Mask a = 0; a < 8; ++a) CHECK(back.at(a, b) == t.at(a, b));
  }
  auto short_table = j;
  short_table.erase(short_table.begin());
  CHECK_THROWS_AS(pl_table_from_json(t.space(), short_table), ParseError);
  auto repeated = j;
  repeated.push_back(j[0]);
  CHECK_THROWS_AS(pl_table_from_json(t.space(), repeated), ParseError);
  auto out_of_range = j;
  for (auto& e : out_of_range) {
    if (e["value"] == "1/3") {
      e["value"] = "4/3";
      break;
    }
  }
  CHECK_THROWS_AS(pl_table_from_json(t.space(), out_of_range), ParseError);
}

TEST_CASE("gluings and functions") {
  SearchConfig config;
  config.atom_count = 4;
  const auto g = propose_gluing(config, 3);
  const auto back = gluing_from_json(to_json(g));
  CHECK(back.mu1 == g.mu1);
  CHECK(back.mu2 == g.mu2);
  CHECK(back.second_block == g.second_block);

  const auto f = UniversalFunction::from_points({{q(1, 2), q(1), q(1, 2)}, {q(0), q(1), q(0)}});
  CHECK(to_json(f) == json({{"0/1", "1/1", "0/1"}, {"1/2", "1/1", "1/2"}}));
}

TEST_CASE("retraction tables round trip") {
  const auto j = json::parse(R"({"carrier": ["3", "1", "2"], "image": ["1", "2"], "table": {"3": "1"}})");
  const auto p = retraction_from_json(j);
  CHECK(p("3") == "1");
  CHECK(p("2") == "2");
  const auto again = retraction_from_json(to_json(p));
  CHECK(again.carrier() == p.carrier());
  CHECK(again("3") == "1");

  const auto f = finite_map_from_json(
      json::parse(R"({"domain": ["x", "y"], "codomain": ["0"], "table": {"x": "0", "y": "0"}})"));
  CHECK(finite_map_from_json(to_json(f)) == f);

  const auto m = binary_map_from_json(json::parse(
      R"({"left": ["a"], "right": ["b", "c"], "codomain": ["u"], "table": [["a", "b", "u"], ["a", "c", "u"]]})"));
  CHECK(to_json(binary_map_from_json(to_json(m))) == to_json(m));

  CHECK_THROWS_AS(retraction_from_json(json::parse(R"({"carrier": ["1"], "image": ["2"], "table": {}})")),
                  ParseError);
  CHECK_THROWS_AS(finite_map_from_json(json::parse(R"({"domain": ["x"], "codomain": ["0"], "table": {}})")),
                  ParseError);
  CHECK_THROWS_AS(binary_map_from_json(json::parse(R"({"left": ["a"], "right": ["b"], "codomain": ["u"], "table": [["a", "b"]]})")),
                  ParseError);
}

TEST_CASE("reports") {
  AxiomReport r;
  r.subject = "x";
  r.verdict = Verdict::unmet;
  r.cases_skipped = 2;
  r.note = "why";
  const auto j = to_json(r);
  CHECK(j["subject"] == "x");
  CHECK(j["verdict"] == "unmet");
  CHECK(j["cases_checked"] == 0);
  CHECK(j["cases_skipped"] == 2);
  CHECK(j["note"] == "why");
  CHECK_FALSE(j.contains("witness"));
}

}
