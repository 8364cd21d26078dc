#pragma once

// Universal-function analysis for plausibility tables: recover F with
// PL(A&B|C) = F(PL(A|B&C), PL(B|C)) when it exists, test it for
// associativity and first-argument homogeneity, and search glued pairs of
// distributions for tables whose F exists but is not associative.

#include "plausival/boolean_algebra.hpp"
#include "plausival/plausible_value.hpp"
#include "plausival/rational.hpp"
#include "plausival/report.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace plausival {

/// (A, B, C) realizing the point (PL(A|B&C), PL(B|C)) -> PL(A&B|C).
struct Triple {
  Mask a = 0;
  Mask b = 0;
  Mask c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

class UniversalFunction {
 public:
  using Id = std::uint32_t;

  // Coordinates and value as ids into values(), ascending, so comparing ids
  // compares the rationals they stand for.
  struct Point {
    Id x;
    Id y;
    Id z;
  };

  /// Throws InvalidArgument when some (x, y) is given two different values.
  static UniversalFunction from_points(
      const std::vector<std::array<Rational, 3>>& points);

  /// Takes points sorted by (x, y) without repeats. provenance is empty or
  /// parallel to points.
  UniversalFunction(std::shared_ptr<const std::vector<Rational>> values,
                    std::vector<Point> points, std::vector<Triple> provenance);

  const std::vector<Rational>& values() const noexcept { return *values_; }
  const Rational& value(Id id) const { return (*values_)[id]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Triple>& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return points_.size(); }

  std::optional<Id> id_of(const Rational& v) const;
  std::optional<Id> find(Id x, Id y) const;
  std::optional<Rational> at(const Rational& x, const Rational& y) const;

  /// z == x * y, exactly.
  bool is_product(const Point& p) const;

 private:
  std::shared_ptr<const std::vector<Rational>> values_;
  std::vector<Point> points_;
  std::vector<Triple> provenance_;
};

/// Two triples with the same (PL(A|B&C), PL(B|C)) but different PL(A&B|C):
/// no universal function exists for the table.
struct FunctionConflict {
  Triple first;
  Triple second;
  Rational x;
  Rational y;
  Rational first_value;
  Rational second_value;
};

using Extraction = std::variant<UniversalFunction, FunctionConflict>;

/// Triples with B&C = 0 are skipped. Tables whose entries depend only on
/// (A&B, B) are scanned as chains D <= B <= C (4^n of them); others by all
/// 8^n triples, which is refused with TooLarge above 8 atoms.
Extraction extract_universal_function(const PLTable& table);

/// Both groupings compared wherever F(y,z), F(x,F(y,z)), F(x,y) and
/// F(F(x,y),z) are all points.
AxiomReport check_associativity(const UniversalFunction& f);

/// F(r x, y) = r F(x, y) whenever (x, y) and (r x, y) are both points.
AxiomReport check_first_arg_homogeneity(const UniversalFunction& f);

/// Requires homogeneity and the unit row: F(1, y) = y wherever (1, y) is a
/// point. Then passes iff F(x, y) = x y at every point. Reports unmet,
/// naming the missing precondition, otherwise.
AxiomReport homogeneity_implies_product(const UniversalFunction& f);

/// Conditionals given B use mu2 when B has strictly more atoms in
/// second_block than outside it, mu1 otherwise. Throws SpaceMismatch, and
/// EmptyBlock when either block is empty.
PLTable glue_two_distributions(const WeightState& mu1, const WeightState& mu2,
                               const Proposition& second_block);

struct SearchConfig {
  std::size_t atom_count = 12;
  std::uint64_t denominator_bound = 24;
  std::uint64_t seed = 0;
  std::size_t max_trials = 1000;
  // Glue every distribution with itself; no counterexample can exist.
  bool identical_distributions = false;
};

/// One candidate gluing, fully determined by (config, trial_index).
struct Gluing {
  WeightState mu1;
  WeightState mu2;
  Proposition second_block;
};

Gluing propose_gluing(const SearchConfig& config, std::size_t trial_index);

struct CounterexampleWitness {
  Gluing gluing;
  UniversalFunction function;
  AxiomReport associativity;  // fail, with the violating triple
  AxiomReport homogeneity;
  std::uint64_t seed = 0;
  std::size_t trial_index = 0;
};

struct SearchTally {
  std::size_t trials = 0;
  std::size_t dependence_violations = 0;  // no universal function
  std::size_t associative = 0;            // F exists and is associative
};

struct Exhausted {
  SearchTally tally;
};

using SearchResult = std::variant<CounterexampleWitness, Exhausted>;

/// Throws InvalidArgument for atom_count outside [2, 12] or a zero
/// denominator bound. The lowest successful trial index wins regardless of
/// how many threads evaluate trials.
SearchResult search_counterexample(const SearchConfig& config);

/// Evaluates a single gluing: extraction, then associativity and
/// homogeneity. Returns the witness when F exists and is not associative.
std::optional<CounterexampleWitness> evaluate_gluing(const Gluing& gluing,
                                                     SearchTally* tally = nullptr);

}  // namespace plausival
