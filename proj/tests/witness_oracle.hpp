#pragma once

// Re-evaluates an axiom or rule witness from its JSON alone, using the
// plain weighted-average oracle (with the same mutation applied), and
// decides whether the reported violation is real.

#include "support.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace plausival::test::oracle {

class WitnessCheck {
 public:
  WitnessCheck(std::vector<Rational> weights, Mutation mutation)
      : w_(std::move(weights)), mutation_(mutation) {}

  // True when the witness reproduces the violation it claims.
  bool reproduces(const AxiomReport& report) const {
    if (report.verdict != Verdict::fail || !report.witness) return false;
    const auto& j = *report.witness;
    const std::string relation = j.at("relation");
    const auto lhs = rat(j.at("lhs"));
    const auto rhs = rat(j.at("rhs"));
    const auto& s = report.subject;

    if (s == "A1_value") {
      const auto x = vec(j["X"]);
      const auto a = mask(j["A"]);
      const auto value = constant_on(x, a);
      return value && pv(x, a) == lhs && *value == rhs && lhs != rhs;
    }
    if (s == "A2_equality") {
      const auto x = vec(j["X"]);
      const auto y = vec(j["Y"]);
      const auto a = mask(j["A"]);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (((a >> i) & 1U) && x[i] != y[i]) return false;
      }
      return pv(x, a) == lhs && pv(y, a) == rhs && lhs != rhs;
    }
    if (s == "A4_order") {
      const auto x = vec(j["X"]);
      const auto y = vec(j["Y"]);
      const auto c = mask(j["C"]);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (((c >> i) & 1U) && x[i] > y[i]) return false;
      }
      return pv(x, c) == lhs && pv(y, c) == rhs && lhs > rhs;
    }
    if (s == "A5_homogeneity_dep") {
      const auto x1 = vec(j["X1"]);
      const auto x2 = vec(j["X2"]);
      const auto r = rat(j["r"]);
      const auto c = mask(j["C"]);
      return pv(x1, c) == pv(x2, c) && pv(scale(x1, r), c) == lhs &&
             pv(scale(x2, r), c) == rhs && lhs != rhs;
    }
    if (s == "A6_cox_dep") {
      const auto x1 = vec(j["X1"]);
      const auto x2 = vec(j["X2"]);
      const auto a = mask(j["A"]);
      const auto c = mask(j["C"]);
      const auto ia = indicator(a, w_.size());
      return (a & c) != 0 && pv(x1, a & c) == pv(x2, a & c) &&
             pv(times(x1, ia), c) == lhs && pv(times(x2, ia), c) == rhs && lhs != rhs;
    }
    if (s == "A7_sure_thing") {
      const auto x = vec(j["X"]);
      const auto y = vec(j["Y"]);
      const auto a = mask(j["A"]);
      const auto b = mask(j["B"]);
      const auto ab = a & b;
      const auto rest = b & ~a;
      return ab != 0 && rest != 0 && pv(x, ab) == pv(y, ab) && pv(x, rest) == pv(y, rest) &&
             pv(x, b) == lhs && pv(y, b) == rhs && lhs != rhs;
    }
    if (s == "A8_rescale") {
      const auto x = vec(j["X"]);
      const auto a = rat(j["a"]);
      const auto b = rat(j["b"]);
      const auto c = mask(j["C"]);
      return pv(shift(scale(x, a), b), c) == lhs && a * pv(x, c) + b == rhs && lhs != rhs;
    }
    if (s == "A9_additivity_dep") {
      const auto x1 = vec(j["X1"]);
      const auto x2 = vec(j["X2"]);
      const auto y = vec(j["Y"]);
      const auto a = mask(j["A"]);
      return pv(x1, a) == pv(x2, a) && pv(plus(x1, y), a) == lhs &&
             pv(plus(x2, y), a) == rhs && lhs != rhs;
    }
    if (s == "product_rule_pv") {
      const auto x = vec(j["X"]);
      const auto a = mask(j["A"]);
      const auto c = mask(j["C"]);
      return (a & c) != 0 && pv(times(x, ind(a)), c) == lhs &&
             pv(x, a & c) * pv(ind(a), c) == rhs && lhs != rhs;
    }
    if (s == "product_rule_pl") {
      const auto a = mask(j["A"]);
      const auto b = mask(j["B"]);
      const auto c = mask(j["C"]);
      return (b & c) != 0 && pv(ind(a & b), c) == lhs &&
             pv(ind(a), b & c) * pv(ind(b), c) == rhs && lhs != rhs;
    }
    if (s == "sum_rule") {
      const auto a = mask(j["A"]);
      const auto b = mask(j["B"]);
      const Mask full = (Mask{1} << w_.size()) - 1;
      return pv(ind(a), b) + pv(ind(full & ~a), b) == lhs && rhs == 1 && lhs != 1;
    }
    if (s == "exclusive_additivity") {
      const auto a = mask(j["A"]);
      const auto b = mask(j["B"]);
      const auto c = mask(j["C"]);
      return (a & b) == 0 && pv(ind(a | b), c) == lhs &&
             pv(ind(a), c) + pv(ind(b), c) == rhs && lhs != rhs;
    }
    if (s == "general_sum" && j.contains("X1")) {
      const auto x1 = vec(j["X1"]);
      const auto y1 = vec(j["Y1"]);
      const auto x2 = vec(j["X2"]);
      const auto y2 = vec(j["Y2"]);
      const auto a = mask(j["A"]);
      return pv(x1, a) == pv(x2, a) && pv(y1, a) == pv(y2, a) &&
             pv(plus(x1, y1), a) == lhs && pv(plus(x2, y2), a) == rhs && lhs != rhs;
    }
    if (s == "general_sum" || (s == "real_additivity" && relation == "PV(X+Y|A) == PV(X|A) + PV(Y|A)")) {
      const auto x = vec(j["X"]);
      const auto y = vec(j["Y"]);
      const auto a = mask(j["A"]);
      return pv(plus(x, y), a) == lhs && pv(x, a) + pv(y, a) == rhs && lhs != rhs;
    }
    if (s == "real_additivity" && j.contains("r")) {
      const auto y = vec(j["Y"]);
      const auto r = rat(j["r"]);
      const auto a = mask(j["A"]);
      return pv(shift(y, r), a) == lhs && r + pv(y, a) == rhs && lhs != rhs;
    }
    if (s == "real_additivity") {
      const auto x = vec(j["X"]);
      const auto y = vec(j["Y"]);
      const auto a = mask(j["A"]);
      return pv(plus(x, y), a) == lhs && pv(shift(y, pv(x, a)), a) == rhs && lhs != rhs;
    }
    if (s == "homogeneity_identity") {
      const auto x = vec(j["X"]);
      const auto r = rat(j["r"]);
      const auto c = mask(j["C"]);
      return pv(scale(x, r), c) == lhs && r * pv(x, c) == rhs && lhs != rhs;
    }
    if (s == "sure_thing_product") {
      const auto x = vec(j["X"]);
      const auto a = mask(j["A"]);
      const auto b = mask(j["B"]);
      const auto ia = ind(a);
      const auto y = scale(ia, pv(x, a & b));
      const auto xa = times(x, ia);
      if (relation == "PV(X I_A|A&B) == PV(Y|A&B)") return pv(xa, a & b) != pv(y, a & b);
      if (relation == "PV(X I_A|B\\A) == PV(Y|B\\A)") return pv(xa, b & ~a) != pv(y, b & ~a);
      if (relation == "PV(X I_A|B) == PV(Y|B)") return pv(xa, b) != pv(y, b);
      return pv(y, b) != pv(x, a & b) * pv(ia, b);
    }
    return false;
  }

 private:
  using Vec = std::vector<Rational>;

  Rational pv(const Vec& x, Mask c) const { return mutated_pv(mutation_, w_, x, c); }
  Vec ind(Mask a) const { return indicator(a, w_.size()); }

  static Rational rat(const nlohmann::json& j) { return parse_rational(j.get<std::string>()); }

  // Labels are a1..an.
  Vec vec(const nlohmann::json& j) const {
    Vec out(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) out[i] = rat(j.at("a" + std::to_string(i + 1)));
    return out;
  }
  static Mask mask(const nlohmann::json& j) {
    Mask m = 0;
    for (const auto& label : j) m |= Mask{1} << (std::stoul(label.get<std::string>().substr(1)) - 1);
    return m;
  }
  static std::optional<Rational> constant_on(const Vec& x, Mask a) {
    std::optional<Rational> value;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!((a >> i) & 1U)) continue;
      if (value && *value != x[i]) return std::nullopt;
      value = x[i];
    }
    return value;
  }
  static Vec scale(Vec x, const Rational& r) {
    for (auto& v : x) v *= r;
    return x;
  }
  static Vec shift(Vec x, const Rational& r) {
    for (auto& v : x) v += r;
    return x;
  }
  static Vec plus(Vec x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  }
  static Vec times(Vec x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= y[i];
    return x;
  }

  std::vector<Rational> w_;
  Mutation mutation_;
};

}  // namespace plausival::test::oracle
