#include "plausival/axiom_checker.hpp"

#include "plausival/json_io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>

namespace plausival {

namespace {

constexpr std::array<std::pair<AxiomId, std::string_view>, 8> kAxiomNames{{
    {AxiomId::A1_value, "A1_value"},
    {AxiomId::A2_equality, "A2_equality"},
    {AxiomId::A4_order, "A4_order"},
    {AxiomId::A5_homogeneity_dep, "A5_homogeneity_dep"},
    {AxiomId::A6_cox_dep, "A6_cox_dep"},
    {AxiomId::A7_sure_thing, "A7_sure_thing"},
    {AxiomId::A8_rescale, "A8_rescale"},
    {AxiomId::A9_additivity_dep, "A9_additivity_dep"},
}};

constexpr std::array<std::pair<RuleId, std::string_view>, 7> kRuleNames{{
    {RuleId::product_rule_pv, "product_rule_pv"},
    {RuleId::product_rule_pl, "product_rule_pl"},
    {RuleId::sum_rule, "sum_rule"},
    {RuleId::exclusive_additivity, "exclusive_additivity"},
    {RuleId::general_sum, "general_sum"},
    {RuleId::real_additivity, "real_additivity"},
    {RuleId::homogeneity_identity, "homogeneity_identity"},
}};

constexpr std::array<std::pair<Mutation, std::string_view>, 4> kMutationNames{{
    {Mutation::none, "none"},
    {Mutation::square_pv, "square-pv"},
    {Mutation::drop_weight, "drop-weight"},
    {Mutation::clamp_pl, "clamp-pl"},
}};

template <typename Id, std::size_t N>
std::string name_of(const std::array<std::pair<Id, std::string_view>, N>& names,
                    Id id) {
  for (const auto& [key, name] : names) {
    if (key == id) return std::string(name);
  }
  return "unknown";
}

template <typename Id, std::size_t N>
std::optional<Id> id_of(const std::array<std::pair<Id, std::string_view>, N>& names,
                        std::string_view name) {
  for (const auto& [key, text] : names) {
    if (text == name) return key;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(AxiomId id) { return name_of(kAxiomNames, id); }
std::string to_string(RuleId id) { return name_of(kRuleNames, id); }
std::string to_string(Mutation m) { return name_of(kMutationNames, m); }
std::optional<AxiomId> parse_axiom_id(std::string_view name) {
  return id_of(kAxiomNames, name);
}
std::optional<RuleId> parse_rule_id(std::string_view name) {
  return id_of(kRuleNames, name);
}
std::optional<Mutation> parse_mutation(std::string_view name) {
  return id_of(kMutationNames, name);
}

PVFunctional::PVFunctional(const PVModel& model, Mutation mutation, bool tabulate)
    : model_(model), mutation_(mutation) {
  const auto n = model_.space().size();
  if (!tabulate || n > kMaxEnumerableAtoms) return;
  const Mask size = Mask{1} << n;
  normalized_.reserve(size);
  normalized_.emplace_back();  // no condition 0
  for (Mask c = 1; c < size; ++c) {
    const auto mask = indicator(Proposition::from_mask(model_.space(), c));
    const Unknown::Values weighted = model_.state().weights() * mask.values();
    const Rational mass = weighted.sum();
    normalized_.emplace_back(weighted / mass);
  }
}

Rational PVFunctional::canonical(const Unknown& x, const Proposition& c) const {
  if (normalized_.empty()) return pv(model_, x, c);
  return (normalized_[c.mask()] * x.values()).sum();
}

Rational PVFunctional::operator()(const Unknown& x, const Proposition& c) const {
  if (!(x.space() == model_.space()) || !(c.space() == model_.space())) {
    throw SpaceMismatch();
  }
  if (is_zero(c)) throw ZeroCondition();
  Rational v = canonical(x, c);
  switch (mutation_) {
    case Mutation::none:
      break;
    case Mutation::square_pv:
      v *= v;
      break;
    case Mutation::drop_weight:
      if (c.contains(0)) {
        v -= model_.state().weight(0) * x(0) /
             model_.state().apply(indicator(c));
      }
      break;
    case Mutation::clamp_pl:
      v = std::min(v, Rational(9, 10));
      break;
  }
  return v;
}

Rational PVFunctional::pl(const Proposition& a, const Proposition& c) const {
  return (*this)(indicator(a), c);
}

TestSuite TestSuite::generate(const AtomSpace& space, std::uint64_t seed,
                              std::size_t random_count) {
  if (space.size() > kMaxEnumerableAtoms) throw TooLarge("test suite needs at most 12 atoms");
  const auto props = all_propositions(space);
  const std::vector<Rational> constants = {Rational(-2), Rational(-1),
                                           Rational(0),  Rational(1, 2),
                                           Rational(1),  Rational(2)};
  TestSuite suite;
  suite.scalars = constants;

  std::set<std::string> seen;
  const auto add = [&](std::vector<Unknown>& into, Unknown x) {
    if (seen.insert(to_string(x)).second) into.push_back(std::move(x));
  };

  for (const auto& a : props) add(suite.pair_unknowns, indicator(a));
  for (const auto& r : constants) {
    add(suite.pair_unknowns, Unknown::constant(space, r));
  }
  // values p/q with p in [-6, 6], q in [1, 4]; modulo keeps the stream
  // independent of the standard library's distributions
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(space.size());
  for (std::size_t k = 0; k < random_count; ++k) {
    Unknown::Values values(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto p = static_cast<long>(rng() % 13) - 6;
      const auto q = static_cast<long>(rng() % 4) + 1;
      values(i) = Rational(p, q);
    }
    add(suite.pair_unknowns, Unknown(space, std::move(values)));
  }

  suite.unknowns = suite.pair_unknowns;
  std::vector<const Unknown*> factors;
  for (const auto& x : suite.pair_unknowns) {
    if (!x.is_constant()) factors.push_back(&x);
  }
  std::vector<Unknown> products;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      add(products, *factors[i] * *factors[j]);
    }
  }
  suite.unknowns.insert(suite.unknowns.end(),
                        std::make_move_iterator(products.begin()),
                        std::make_move_iterator(products.end()));
  return suite;
}

AxiomReport structural_report() {
  AxiomReport report;
  report.subject = std::string(kStructuralSubject);
  report.note = "structural: holds by construction";
  return report;
}

namespace {

using PVTable = std::vector<std::vector<Rational>>;  // [unknown][condition mask]

struct Context {
  Context(const PVModel& m, Mutation mutation)
      : pvf(m, mutation),
        space(m.space()),
        props(all_propositions(m.space())),
        size(Mask{1} << m.space().size()) {}

  PVTable table(const std::vector<Unknown>& xs) const {
    PVTable out(xs.size(), std::vector<Rational>(size));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (Mask c = 1; c < size; ++c) out[i][c] = pvf(xs[i], props[c]);
    }
    return out;
  }

  std::vector<std::vector<Rational>> pl_table() const {
    std::vector<std::vector<Rational>> out(size, std::vector<Rational>(size));
    for (Mask a = 0; a < size; ++a) {
      const auto ind = indicator(props[a]);
      for (Mask c = 1; c < size; ++c) out[a][c] = pvf(ind, props[c]);
    }
    return out;
  }

  PVFunctional pvf;
  AtomSpace space;
  std::vector<Proposition> props;
  Mask size;
};

json to_json_value(const Rational& r) { return to_json(r); }

void fail(AxiomReport& report, json witness, const Rational& lhs,
          const Rational& rhs, std::string_view relation) {
  report.verdict = Verdict::fail;
  witness["lhs"] = to_json_value(lhs);
  witness["rhs"] = to_json_value(rhs);
  witness["relation"] = relation;
  report.witness = std::move(witness);
}

// Records, per key, the first unknown seen and its derived value; a later
// unknown with the same key but another derived value is a dependence
// violation.
template <typename Key>
class DependenceTracker {
 public:
  // Returns the index of the earlier unknown on a violation.
  std::optional<std::size_t> observe(const Key& key, std::size_t index,
                                     const Rational& derived) {
    const auto [it, inserted] = first_.try_emplace(key, index, derived);
    if (inserted || it->second.second == derived) return std::nullopt;
    return it->second.first;
  }
  const Rational& derived_of(const Key& key) const {
    return first_.at(key).second;
  }

 private:
  std::map<Key, std::pair<std::size_t, Rational>> first_;
};

AxiomReport check_a1(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A1_value);
  for (std::size_t i = 0; i < suite.unknowns.size(); ++i) {
    const auto& x = suite.unknowns[i];
    for (Mask a = 1; a < ctx.size; ++a) {
      const auto s = implied_value(x, ctx.props[a]);
      if (!s) continue;
      ++report.cases_checked;
      const auto value = ctx.pvf(x, ctx.props[a]);
      if (value != *s) {
        fail(report, {{"X", to_json(x)}, {"A", to_json(ctx.props[a])}}, value,
             *s, "PV(X|A) == s");
        return report;
      }
    }
  }
  return report;
}

AxiomReport check_a2(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A2_equality);
  const auto& xs = suite.unknowns;
  for (Mask a = 1; a < ctx.size; ++a) {
    const auto& prop = ctx.props[a];
    const auto atoms = prop.atoms();
    std::map<std::vector<Rational>, std::pair<std::size_t, Rational>> groups;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<Rational> restriction;
      restriction.reserve(atoms.size());
      for (const auto atom : atoms) restriction.push_back(xs[i](atom));
      const auto value = ctx.pvf(xs[i], prop);
      const auto [it, inserted] =
          groups.try_emplace(std::move(restriction), i, value);
      if (inserted) continue;
      ++report.cases_checked;
      if (it->second.second != value) {
        fail(report,
             {{"X", to_json(xs[it->second.first])},
              {"Y", to_json(xs[i])},
              {"A", to_json(prop)}},
             it->second.second, value, "PV(X|A) == PV(Y|A)");
        return report;
      }
    }
  }
  return report;
}

AxiomReport check_a4(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A4_order);
  const auto& xs = suite.unknowns;
  const auto& ys = suite.pair_unknowns;
  const auto pv_x = ctx.table(xs);
  const auto pv_y = ctx.table(ys);
  const auto check = [&](const Unknown& x, const Rational& px, const Unknown& y,
                         const Rational& py, Mask c) {
    if (!implied_leq(x, y, ctx.props[c])) return true;
    ++report.cases_checked;
    if (px <= py) return true;
    fail(report,
         {{"X", to_json(x)}, {"Y", to_json(y)}, {"C", to_json(ctx.props[c])}},
         px, py, "PV(X|C) <= PV(Y|C)");
    return false;
  };
  for (Mask c = 1; c < ctx.size; ++c) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (!check(xs[i], pv_x[i][c], ys[j], pv_y[j][c], c)) return report;
        if (!check(ys[j], pv_y[j][c], xs[i], pv_x[i][c], c)) return report;
      }
    }
  }
  return report;
}

AxiomReport check_a5(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A5_homogeneity_dep);
  const auto& xs = suite.unknowns;
  const auto pv_x = ctx.table(xs);
  for (const auto& r : suite.scalars) {
    for (Mask c = 1; c < ctx.size; ++c) {
      DependenceTracker<Rational> tracker;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++report.cases_checked;
        const auto derived = ctx.pvf(r * xs[i], ctx.props[c]);
        if (const auto earlier = tracker.observe(pv_x[i][c], i, derived)) {
          fail(report,
               {{"X1", to_json(xs[*earlier])},
                {"X2", to_json(xs[i])},
                {"r", to_json(r)},
                {"C", to_json(ctx.props[c])},
                {"conditioning", to_json(pv_x[i][c])}},
               tracker.derived_of(pv_x[i][c]), derived,
               "PV(r X1|C) == PV(r X2|C)");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport check_a6(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A6_cox_dep);
  const auto& xs = suite.unknowns;
  const auto pv_x = ctx.table(xs);
  for (Mask a = 0; a < ctx.size; ++a) {
    const auto ind = indicator(ctx.props[a]);
    for (Mask c = 1; c < ctx.size; ++c) {
      const Mask ac = a & c;
      if (ac == 0) {
        report.cases_skipped += xs.size();
        continue;
      }
      DependenceTracker<Rational> tracker;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++report.cases_checked;
        const auto derived = ctx.pvf(xs[i] * ind, ctx.props[c]);
        if (const auto earlier = tracker.observe(pv_x[i][ac], i, derived)) {
          fail(report,
               {{"X1", to_json(xs[*earlier])},
                {"X2", to_json(xs[i])},
                {"A", to_json(ctx.props[a])},
                {"C", to_json(ctx.props[c])},
                {"conditioning", to_json(pv_x[i][ac])}},
               tracker.derived_of(pv_x[i][ac]), derived,
               "PV(X1 I_A|C) == PV(X2 I_A|C)");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport check_a7(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A7_sure_thing);
  const auto& xs = suite.unknowns;
  const auto pv_x = ctx.table(xs);
  for (Mask a = 0; a < ctx.size; ++a) {
    for (Mask b = 1; b < ctx.size; ++b) {
      const Mask ab = a & b;
      const Mask b_minus_a = b & ~a;
      if (a == 0 || ab == 0 || b_minus_a == 0) {
        report.cases_skipped += xs.size();
        continue;
      }
      using Key = std::pair<Rational, Rational>;
      DependenceTracker<Key> tracker;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++report.cases_checked;
        const Key key{pv_x[i][ab], pv_x[i][b_minus_a]};
        if (const auto earlier = tracker.observe(key, i, pv_x[i][b])) {
          fail(report,
               {{"X", to_json(xs[*earlier])},
                {"Y", to_json(xs[i])},
                {"A", to_json(ctx.props[a])},
                {"B", to_json(ctx.props[b])}},
               tracker.derived_of(key), pv_x[i][b], "PV(X|B) == PV(Y|B)");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport check_a8(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A8_rescale);
  const auto& xs = suite.unknowns;
  const auto pv_x = ctx.table(xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const auto& a : suite.scalars) {
      for (const auto& b : suite.scalars) {
        const auto shifted = affine(a, xs[i], b);
        for (Mask c = 1; c < ctx.size; ++c) {
          ++report.cases_checked;
          const auto lhs = ctx.pvf(shifted, ctx.props[c]);
          const auto rhs = a * pv_x[i][c] + b;
          if (lhs != rhs) {
            fail(report,
                 {{"X", to_json(xs[i])},
                  {"a", to_json(a)},
                  {"b", to_json(b)},
                  {"C", to_json(ctx.props[c])}},
                 lhs, rhs, "PV(aX+b|C) == a PV(X|C) + b");
            return report;
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_a9(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(AxiomId::A9_additivity_dep);
  const auto& xs = suite.pair_unknowns;
  const auto pv_x = ctx.table(xs);
  for (const auto& y : xs) {
    for (Mask a = 1; a < ctx.size; ++a) {
      DependenceTracker<Rational> tracker;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++report.cases_checked;
        const auto derived = ctx.pvf(xs[i] + y, ctx.props[a]);
        if (const auto earlier = tracker.observe(pv_x[i][a], i, derived)) {
          fail(report,
               {{"X1", to_json(xs[*earlier])},
                {"X2", to_json(xs[i])},
                {"Y", to_json(y)},
                {"A", to_json(ctx.props[a])},
                {"conditioning", to_json(pv_x[i][a])}},
               tracker.derived_of(pv_x[i][a]), derived,
               "PV(X1+Y|A) == PV(X2+Y|A)");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport product_rule_pv(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(RuleId::product_rule_pv);
  const auto& xs = suite.unknowns;
  const auto pv_x = ctx.table(xs);
  const auto pl = ctx.pl_table();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (Mask a = 0; a < ctx.size; ++a) {
      const auto product = xs[i] * indicator(ctx.props[a]);
      for (Mask c = 1; c < ctx.size; ++c) {
        if ((a & c) == 0) {
          ++report.cases_skipped;
          continue;
        }
        ++report.cases_checked;
        const auto lhs = ctx.pvf(product, ctx.props[c]);
        const auto rhs = pv_x[i][a & c] * pl[a][c];
        if (lhs != rhs) {
          fail(report,
               {{"X", to_json(xs[i])},
                {"A", to_json(ctx.props[a])},
                {"C", to_json(ctx.props[c])}},
               lhs, rhs, "PV(X I_A|C) == PV(X|A&C) PV(I_A|C)");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport product_rule_pl(const Context& ctx) {
  AxiomReport report;
  report.subject = to_string(RuleId::product_rule_pl);
  const auto pl = ctx.pl_table();
  for (Mask a = 0; a < ctx.size; ++a) {
    for (Mask b = 0; b < ctx.size; ++b) {
      for (Mask c = 1; c < ctx.size; ++c) {
        if ((b & c) == 0) {
          ++report.cases_skipped;
          continue;
        }
        ++report.cases_checked;
        const auto& lhs = pl[a & b][c];
        const auto rhs = pl[a][b & c] * pl[b][c];
        if (lhs != rhs) {
          fail(report,
               {{"A", to_json(ctx.props[a])},
                {"B", to_json(ctx.props[b])},
                {"C", to_json(ctx.props[c])}},
               lhs, rhs, "PL(A&B|C) == PL(A|B&C) PL(B|C)");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport sum_rule(const Context& ctx) {
  AxiomReport report;
  report.subject = to_string(RuleId::sum_rule);
  const auto pl = ctx.pl_table();
  const Mask full = ctx.size - 1;
  for (Mask a = 0; a < ctx.size; ++a) {
    for (Mask b = 1; b < ctx.size; ++b) {
      ++report.cases_checked;
      const auto lhs = pl[a][b] + pl[full & ~a][b];
      if (lhs != 1) {
        fail(report, {{"A", to_json(ctx.props[a])}, {"B", to_json(ctx.props[b])}},
             lhs, Rational(1), "PL(A|B) + PL(notA|B) == 1");
        return report;
      }
    }
  }
  return report;
}

AxiomReport exclusive_additivity(const Context& ctx) {
  AxiomReport report;
  report.subject = to_string(RuleId::exclusive_additivity);
  const auto pl = ctx.pl_table();
  for (Mask a = 0; a < ctx.size; ++a) {
    for (Mask b = 0; b < ctx.size; ++b) {
      if ((a & b) != 0) continue;
      for (Mask c = 1; c < ctx.size; ++c) {
        ++report.cases_checked;
        const auto& lhs = pl[a | b][c];
        const auto rhs = pl[a][c] + pl[b][c];
        if (lhs != rhs) {
          fail(report,
               {{"A", to_json(ctx.props[a])},
                {"B", to_json(ctx.props[b])},
                {"C", to_json(ctx.props[c])}},
               lhs, rhs, "PL(A or B|C) == PL(A|C) + PL(B|C)");
          return report;
        }
      }
    }
  }
  return report;
}

// Combination route: PV(X+Y|A) must depend only on (PV(X|A), PV(Y|A)); the
// only such rule is the sum.
AxiomReport general_sum(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(RuleId::general_sum);
  const auto& xs = suite.pair_unknowns;
  const auto pv_x = ctx.table(xs);
  for (Mask a = 1; a < ctx.size; ++a) {
    using Key = std::pair<Rational, Rational>;
    std::map<Key, std::pair<std::pair<std::size_t, std::size_t>, Rational>> seen;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        ++report.cases_checked;
        const auto lhs = ctx.pvf(xs[i] + xs[j], ctx.props[a]);
        const Key key{pv_x[i][a], pv_x[j][a]};
        const auto [it, inserted] = seen.try_emplace(key, std::pair{i, j}, lhs);
        if (!inserted && it->second.second != lhs) {
          const auto [fi, fj] = it->second.first;
          fail(report,
               {{"X1", to_json(xs[fi])},
                {"Y1", to_json(xs[fj])},
                {"X2", to_json(xs[i])},
                {"Y2", to_json(xs[j])},
                {"A", to_json(ctx.props[a])}},
               it->second.second, lhs, "PV(X1+Y1|A) == PV(X2+Y2|A)");
          report.note = "PV(X+Y|A) is not a function of (PV(X|A), PV(Y|A))";
          return report;
        }
        const auto rhs = pv_x[i][a] + pv_x[j][a];
        if (lhs != rhs) {
          fail(report,
               {{"X", to_json(xs[i])},
                {"Y", to_json(xs[j])},
                {"A", to_json(ctx.props[a])}},
               lhs, rhs, "PV(X+Y|A) == PV(X|A) + PV(Y|A)");
          return report;
        }
      }
    }
  }
  return report;
}

// Rescale route: f(r) = PV(r+Y|A) = r + PV(Y|A) on constants, and
// PV(X+Y|A) = f(PV(X|A)) since X and the constant PV(X|A) share a PV.
AxiomReport real_additivity(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(RuleId::real_additivity);
  const auto& xs = suite.pair_unknowns;
  const auto pv_x = ctx.table(xs);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const auto& y = xs[j];
    for (Mask a = 1; a < ctx.size; ++a) {
      const auto& prop = ctx.props[a];
      for (const auto& r : suite.scalars) {
        ++report.cases_checked;
        const auto lhs = ctx.pvf(affine(Rational(1), y, r), prop);
        const auto rhs = r + pv_x[j][a];
        if (lhs != rhs) {
          fail(report, {{"Y", to_json(y)}, {"r", to_json(r)}, {"A", to_json(prop)}},
               lhs, rhs, "PV(r+Y|A) == r + PV(Y|A)");
          return report;
        }
      }
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++report.cases_checked;
        const auto lhs = ctx.pvf(xs[i] + y, prop);
        const auto via_constant = ctx.pvf(affine(Rational(1), y, pv_x[i][a]), prop);
        const auto rhs = pv_x[i][a] + pv_x[j][a];
        if (lhs != via_constant || lhs != rhs) {
          fail(report, {{"X", to_json(xs[i])}, {"Y", to_json(y)}, {"A", to_json(prop)}},
               lhs, lhs != via_constant ? via_constant : rhs,
               lhs != via_constant ? "PV(X+Y|A) == PV(PV(X|A)+Y|A)"
                                   : "PV(X+Y|A) == PV(X|A) + PV(Y|A)");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport homogeneity_identity(const Context& ctx, const TestSuite& suite) {
  AxiomReport report;
  report.subject = to_string(RuleId::homogeneity_identity);
  const auto& xs = suite.unknowns;
  const auto pv_x = ctx.table(xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const auto& r : suite.scalars) {
      const auto scaled = r * xs[i];
      for (Mask c = 1; c < ctx.size; ++c) {
        ++report.cases_checked;
        const auto lhs = ctx.pvf(scaled, ctx.props[c]);
        const auto rhs = r * pv_x[i][c];
        if (lhs != rhs) {
          fail(report,
               {{"X", to_json(xs[i])}, {"r", to_json(r)}, {"C", to_json(ctx.props[c])}},
               lhs, rhs, "PV(rX|C) == r PV(X|C)");
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace

AxiomReport check_axiom(const PVModel& m, AxiomId id, const TestSuite& suite,
                        Mutation mutation) {
  const Context ctx(m, mutation);
  switch (id) {
    case AxiomId::A1_value:
      return check_a1(ctx, suite);
    case AxiomId::A2_equality:
      return check_a2(ctx, suite);
    case AxiomId::A4_order:
      return check_a4(ctx, suite);
    case AxiomId::A5_homogeneity_dep:
      return check_a5(ctx, suite);
    case AxiomId::A6_cox_dep:
      return check_a6(ctx, suite);
    case AxiomId::A7_sure_thing:
      return check_a7(ctx, suite);
    case AxiomId::A8_rescale:
      return check_a8(ctx, suite);
    case AxiomId::A9_additivity_dep:
      return check_a9(ctx, suite);
  }
  throw InvalidArgument("unknown axiom id");
}

AxiomReport verify_rule(const PVModel& m, RuleId id, const TestSuite& suite,
                        Mutation mutation) {
  const Context ctx(m, mutation);
  switch (id) {
    case RuleId::product_rule_pv:
      return product_rule_pv(ctx, suite);
    case RuleId::product_rule_pl:
      return product_rule_pl(ctx);
    case RuleId::sum_rule:
      return sum_rule(ctx);
    case RuleId::exclusive_additivity:
      return exclusive_additivity(ctx);
    case RuleId::general_sum:
      return general_sum(ctx, suite);
    case RuleId::real_additivity:
      return real_additivity(ctx, suite);
    case RuleId::homogeneity_identity:
      return homogeneity_identity(ctx, suite);
  }
  throw InvalidArgument("unknown rule id");
}

AxiomReport derive_product_from_sure_thing(const PVModel& m, const Unknown& x,
                                           const Proposition& a,
                                           const Proposition& b,
                                           Mutation mutation) {
  AxiomReport report;
  report.subject = "sure_thing_product";
  const auto ab = a & b;
  const auto b_minus_a = b - a;
  if (is_zero(a) || is_zero(ab) || is_zero(b_minus_a)) {
    report.verdict = Verdict::unmet;
    report.cases_skipped = 1;
    report.note = "hypothesis side-condition unmet: A, A&B and B\\A must be nonzero";
    return report;
  }
  const PVFunctional pvf(m, mutation, false);
  const auto ind = indicator(a);
  const auto x_on_a = x * ind;
  const Rational conditional = pvf(x, ab);
  const auto y = conditional * ind;

  const std::array<std::tuple<Rational, Rational, const char*>, 4> steps{{
      {pvf(x_on_a, ab), pvf(y, ab), "PV(X I_A|A&B) == PV(Y|A&B)"},
      {pvf(x_on_a, b_minus_a), pvf(y, b_minus_a), "PV(X I_A|B\\A) == PV(Y|B\\A)"},
      {pvf(x_on_a, b), pvf(y, b), "PV(X I_A|B) == PV(Y|B)"},
      {pvf(y, b), conditional * pvf(ind, b), "PV(Y|B) == PV(X|A&B) PL(A|B)"},
  }};
  for (const auto& [lhs, rhs, relation] : steps) {
    ++report.cases_checked;
    if (lhs != rhs) {
      fail(report, {{"X", to_json(x)}, {"A", to_json(a)}, {"B", to_json(b)}}, lhs,
           rhs, relation);
      return report;
    }
  }
  return report;
}

}  // namespace plausival
