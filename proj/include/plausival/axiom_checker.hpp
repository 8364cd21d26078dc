#pragma once

// Decision procedures for the plausible-value axioms and the rules derived
// from them, evaluated exactly over a finite generated suite of unknowns,
// every proposition of the space and a set of rational scalars.

#include "plausival/boolean_algebra.hpp"
#include "plausival/plausible_value.hpp"
#include "plausival/rational.hpp"
#include "plausival/report.hpp"
#include "plausival/unknowns.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plausival {

enum class AxiomId {
  A1_value,
  A2_equality,
  A4_order,
  A5_homogeneity_dep,
  A6_cox_dep,
  A7_sure_thing,
  A8_rescale,
  A9_additivity_dep,
};

enum class RuleId {
  product_rule_pv,
  product_rule_pl,
  sum_rule,
  exclusive_additivity,
  general_sum,
  real_additivity,
  homogeneity_identity,
};

inline constexpr std::array kAllAxioms = {
    AxiomId::A1_value,           AxiomId::A2_equality,
    AxiomId::A4_order,           AxiomId::A5_homogeneity_dep,
    AxiomId::A6_cox_dep,         AxiomId::A7_sure_thing,
    AxiomId::A8_rescale,         AxiomId::A9_additivity_dep,
};

inline constexpr std::array kAllRules = {
    RuleId::product_rule_pv,      RuleId::product_rule_pl,
    RuleId::sum_rule,             RuleId::exclusive_additivity,
    RuleId::general_sum,          RuleId::real_additivity,
    RuleId::homogeneity_identity,
};

std::string to_string(AxiomId id);
std::string to_string(RuleId id);
std::optional<AxiomId> parse_axiom_id(std::string_view name);
std::optional<RuleId> parse_rule_id(std::string_view name);

/// Subject name of the algebra axiom, which the Unknown type enforces.
inline constexpr std::string_view kStructuralSubject = "A3_structural";

/// Deliberately broken plausible-value functionals used to show that the
/// checks have teeth.
enum class Mutation {
  none,
  square_pv,    // PV(X|C)^2
  drop_weight,  // the first atom's term is left out of the numerator
  clamp_pl,     // min(PV(X|C), 9/10)
};

inline constexpr std::array kAllMutations = {
    Mutation::square_pv, Mutation::drop_weight, Mutation::clamp_pl};

std::string to_string(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);

/// PV of a model, optionally mutated. Conditional weight vectors
/// w I_C / f(I_C) are cached per condition for small spaces unless
/// tabulate is false (worth it only for many evaluations).
class PVFunctional {
 public:
  explicit PVFunctional(const PVModel& model, Mutation mutation = Mutation::none,
                        bool tabulate = true);

  const PVModel& model() const noexcept { return model_; }
  Mutation mutation() const noexcept { return mutation_; }

  /// Throws ZeroCondition for c = 0.
  Rational operator()(const Unknown& x, const Proposition& c) const;
  Rational pl(const Proposition& a, const Proposition& c) const;

 private:
  Rational canonical(const Unknown& x, const Proposition& c) const;

  PVModel model_;
  Mutation mutation_;
  std::vector<Unknown::Values> normalized_;  // indexed by condition mask
};

struct TestSuite {
  // Range of the quantified unknown in single-unknown cases.
  std::vector<Unknown> unknowns;
  // Range of both unknowns where two unknowns are quantified jointly.
  std::vector<Unknown> pair_unknowns;
  std::vector<Rational> scalars;

  /// Indicators of every proposition, the constants -2, -1, 0, 1/2, 1, 2,
  /// random_count seeded random unknowns, and every pairwise product of the
  /// non-constant ones. pair_unknowns is everything but the products.
  /// Throws TooLarge above kMaxEnumerableAtoms.
  static TestSuite generate(const AtomSpace& space, std::uint64_t seed = 0,
                            std::size_t random_count = 32);
};

AxiomReport check_axiom(const PVModel& m, AxiomId id, const TestSuite& suite,
                        Mutation mutation = Mutation::none);

AxiomReport verify_rule(const PVModel& m, RuleId id, const TestSuite& suite,
                        Mutation mutation = Mutation::none);

/// The algebra of unknowns is a commutative algebra by construction.
AxiomReport structural_report();

/// With Y = PV(X|A&B) I_A, checks the two sure-thing premises
/// PV(X I_A|A&B) = PV(Y|A&B) and PV(X I_A|B\A) = PV(Y|B\A), the conclusion
/// PV(X I_A|B) = PV(Y|B), and that homogeneity turns it into
/// PV(X I_A|B) = PV(X|A&B) PL(A|B). Reports unmet when A&B or B\A is 0.
AxiomReport derive_product_from_sure_thing(const PVModel& m, const Unknown& x,
                                           const Proposition& a,
                                           const Proposition& b,
                                           Mutation mutation = Mutation::none);

}  // namespace plausival
