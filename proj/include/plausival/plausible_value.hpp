#pragma once

// Plausible values on a finite model: a strictly positive weight state f
// gives PV(X|A) = f(X I_A) / f(I_A), PL(A|B) = PV(I_A|B) and the odds
// PL(A|B) / PL(notA|B). PLTable holds free-form plausibilities that need
// not come from any state.

#include "plausival/boolean_algebra.hpp"
#include "plausival/error.hpp"
#include "plausival/rational.hpp"
#include "plausival/unknowns.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace plausival {

template <typename Scalar>
class BasicWeightState {
 public:
  using Values = typename BasicUnknown<Scalar>::Values;

  /// Throws InvalidArgument unless every weight is strictly positive.
  BasicWeightState(AtomSpace space, Values weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    if (static_cast<std::size_t>(weights_.size()) != space_.size()) {
      throw InvalidArgument("weight state needs one weight per atom");
    }
    if (!(weights_ > Scalar(0)).all()) {
      throw InvalidArgument("weights must be strictly positive");
    }
  }

  static BasicWeightState uniform(const AtomSpace& space) {
    return {space,
            Values::Constant(static_cast<Eigen::Index>(space.size()), Scalar(1))};
  }

  const AtomSpace& space() const noexcept { return space_; }
  const Values& weights() const noexcept { return weights_; }
  const Scalar& weight(std::size_t atom) const {
    return weights_(static_cast<Eigen::Index>(atom));
  }

  /// f applied to an unknown: sum of w(atom) * x(atom).
  Scalar apply(const BasicUnknown<Scalar>& x) const {
    if (!(x.space() == space_)) throw SpaceMismatch();
    return (weights_ * x.values()).sum();
  }

  friend bool operator==(const BasicWeightState& a, const BasicWeightState& b) {
    return a.space_ == b.space_ && (a.weights_ == b.weights_).all();
  }

 private:
  AtomSpace space_;
  Values weights_;
};

template <typename Scalar>
class BasicPVModel {
 public:
  explicit BasicPVModel(BasicWeightState<Scalar> state,
                        std::optional<World> world = std::nullopt)
      : state_(std::move(state)), world_(std::move(world)) {
    if (world_ && !(world_->space() == state_.space())) throw SpaceMismatch();
  }

  const BasicWeightState<Scalar>& state() const noexcept { return state_; }
  const AtomSpace& space() const noexcept { return state_.space(); }
  const std::optional<World>& world() const noexcept { return world_; }

 private:
  BasicWeightState<Scalar> state_;
  std::optional<World> world_;
};

using WeightState = BasicWeightState<Rational>;
using PVModel = BasicPVModel<Rational>;

/// PV(x|a) = f(x I_a) / f(I_a). Throws ZeroCondition for a = 0 and
/// SpaceMismatch across spaces.
template <typename Scalar>
Scalar pv(const BasicPVModel<Scalar>& m, const BasicUnknown<Scalar>& x,
          const Proposition& a) {
  if (!(x.space() == m.space()) || !(a.space() == m.space())) {
    throw SpaceMismatch();
  }
  if (is_zero(a)) throw ZeroCondition();
  const auto mask = indicator<Scalar>(a);
  const auto& f = m.state();
  return f.apply(x * mask) / f.apply(mask);
}

/// PL(a|b) = PV(I_a|b), always in [0, 1].
template <typename Scalar>
Scalar pl(const BasicPVModel<Scalar>& m, const Proposition& a,
          const Proposition& b) {
  return pv(m, indicator<Scalar>(a), b);
}

/// PL(a|b) / PL(notA|b). Throws InfiniteOdds when PL(notA|b) = 0.
template <typename Scalar>
Scalar odds(const BasicPVModel<Scalar>& m, const Proposition& a,
            const Proposition& b) {
  const Scalar against = pl(m, complement(a), b);
  if (against == Scalar(0)) throw InfiniteOdds();
  return pl(m, a, b) / against;
}

// Plausibility table over E x E_0 with entries in [0, 1] and the
// normalization rows PL(B|B) = 1, PL(0|B) = 0. Entries are stored as ids
// into an ascending dictionary of distinct values, so equal values share an
// id and id order is value order.
class PLTable {
 public:
  using Id = std::uint32_t;
  static constexpr Id kNoEntry = ~Id{0};

  /// Builds from an arbitrary rule over every (A, B) with B != 0.
  /// Throws InvalidArgument on entries outside [0, 1] or broken
  /// normalization rows, TooLarge above kMaxEnumerableAtoms.
  static PLTable from_rule(const AtomSpace& space,
                           const std::function<Rational(Mask a, Mask b)>& rule);

  /// Builds a table whose entries depend only on (A & B, B): rule is
  /// queried once per pair part <= given, given != 0.
  static PLTable from_local_rule(
      const AtomSpace& space,
      const std::function<Rational(Mask part, Mask given)>& rule);

  /// As from_local_rule, with the entry for (part, given) taken as
  /// values[index(part, given)]. values is read, and moved from, only after
  /// index has been called for every pair, so index may append to it.
  /// Values may be unsorted and repeat.
  static PLTable from_local_indexed(
      const AtomSpace& space,
      const std::function<std::uint32_t(Mask part, Mask given)>& index,
      std::vector<Rational>& values);

  const AtomSpace& space() const noexcept { return space_; }
  std::size_t atom_count() const noexcept { return space_.size(); }
  Mask full_mask() const noexcept { return (Mask{1} << space_.size()) - 1; }

  /// Throws ZeroCondition when b = 0.
  const Rational& at(Mask a, Mask b) const { return values_[id(a, b)]; }
  const Rational& at(const Proposition& a, const Proposition& b) const;
  Id id(Mask a, Mask b) const;
  // No range or zero checks.
  Id id_unchecked(Mask a, Mask b) const noexcept {
    return ids_[(static_cast<std::size_t>(b) << space_.size()) | a];
  }

  /// Distinct entry values in ascending order.
  const std::vector<Rational>& values() const noexcept { return values_; }

  /// True when every entry satisfies PL(A|B) = PL(A & B|B).
  bool local() const noexcept { return local_; }

  std::size_t entry_count() const noexcept {
    const std::size_t size = std::size_t{1} << space_.size();
    return size * (size - 1);
  }

 private:
  PLTable(AtomSpace space, std::vector<Rational> values, std::vector<Id> ids);
  void validate() const;

  AtomSpace space_;
  std::vector<Rational> values_;
  std::vector<Id> ids_;  // ids_[b * 2^n + a]
  bool local_ = false;
};

/// Materializes PL over all of E x E_0. Throws TooLarge above
/// kMaxEnumerableAtoms atoms.
PLTable pl_table(const PVModel& m);

}  // namespace plausival
