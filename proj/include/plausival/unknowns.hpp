#pragma once

// The algebra T of unknown numbers over a finite atom space. An unknown is
// its value in each possible world; constants embed the scalars. Dense
// storage is an Eigen array templated on the scalar type.

#include "plausival/boolean_algebra.hpp"
#include "plausival/error.hpp"
#include "plausival/rational.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace plausival {

template <typename Scalar>
class BasicUnknown {
 public:
  using Values = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  BasicUnknown(AtomSpace space, Values values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (static_cast<std::size_t>(values_.size()) != space_.size()) {
      throw InvalidArgument("unknown needs exactly one value per atom");
    }
  }

  static BasicUnknown constant(const AtomSpace& space, const Scalar& value) {
    return BasicUnknown(
        space, Values::Constant(static_cast<Eigen::Index>(space.size()), value));
  }

  const AtomSpace& space() const noexcept { return space_; }
  const Values& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return space_.size(); }
  const Scalar& operator()(std::size_t atom) const {
    return values_(static_cast<Eigen::Index>(atom));
  }

  bool is_constant() const {
    return (values_ == values_(0)).all();
  }

  friend bool operator==(const BasicUnknown& a, const BasicUnknown& b) {
    return a.space_ == b.space_ && (a.values_ == b.values_).all();
  }

 private:
  AtomSpace space_;
  Values values_;
};

using Unknown = BasicUnknown<Rational>;

enum class Operation { add, mul };

namespace detail {
template <typename Scalar>
void require_same_space(const BasicUnknown<Scalar>& x,
                        const BasicUnknown<Scalar>& y) {
  if (!(x.space() == y.space())) throw SpaceMismatch();
}
}  // namespace detail

/// Pointwise sum or product. Throws SpaceMismatch.
template <typename Scalar>
BasicUnknown<Scalar> combine(const BasicUnknown<Scalar>& x,
                             const BasicUnknown<Scalar>& y, Operation op) {
  detail::require_same_space(x, y);
  if (op == Operation::add) {
    return {x.space(), x.values() + y.values()};
  }
  return {x.space(), x.values() * y.values()};
}

template <typename Scalar>
BasicUnknown<Scalar> operator+(const BasicUnknown<Scalar>& x,
                               const BasicUnknown<Scalar>& y) {
  return combine(x, y, Operation::add);
}

template <typename Scalar>
BasicUnknown<Scalar> operator*(const BasicUnknown<Scalar>& x,
                               const BasicUnknown<Scalar>& y) {
  return combine(x, y, Operation::mul);
}

template <typename Scalar>
BasicUnknown<Scalar> operator-(const BasicUnknown<Scalar>& x,
                               const BasicUnknown<Scalar>& y) {
  detail::require_same_space(x, y);
  return {x.space(), x.values() - y.values()};
}

/// Pointwise a*x + b.
template <typename Scalar>
BasicUnknown<Scalar> affine(const Scalar& a, const BasicUnknown<Scalar>& x,
                            const Scalar& b) {
  return {x.space(), x.values() * a + b};
}

template <typename Scalar>
BasicUnknown<Scalar> operator*(const Scalar& r, const BasicUnknown<Scalar>& x) {
  return {x.space(), x.values() * r};
}

/// 1 on the atoms of a, 0 elsewhere.
template <typename Scalar = Rational>
BasicUnknown<Scalar> indicator(const Proposition& a) {
  const auto n = static_cast<Eigen::Index>(a.space().size());
  typename BasicUnknown<Scalar>::Values values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(i) = a.contains(static_cast<std::size_t>(i)) ? Scalar(1) : Scalar(0);
  }
  return {a.space(), std::move(values)};
}

/// A possible world singled out as the actual one.
class World {
 public:
  World(AtomSpace space, std::size_t actual_atom)
      : space_(std::move(space)), actual_atom_(actual_atom) {
    if (actual_atom_ >= space_.size()) {
      throw InvalidArgument("actual atom outside the space");
    }
  }

  const AtomSpace& space() const noexcept { return space_; }
  std::size_t actual_atom() const noexcept { return actual_atom_; }

 private:
  AtomSpace space_;
  std::size_t actual_atom_;
};

template <typename Scalar>
Scalar actual_value(const BasicUnknown<Scalar>& x, const World& w) {
  if (!(x.space() == w.space())) throw SpaceMismatch();
  return x(w.actual_atom());
}

// "a implies AV(X) = s" holds when X takes the value s on every atom of a.

/// The value a forces on x, if any. Throws ZeroCondition for a = 0.
template <typename Scalar>
std::optional<Scalar> implied_value(const BasicUnknown<Scalar>& x,
                                    const Proposition& a) {
  if (!(x.space() == a.space())) throw SpaceMismatch();
  if (is_zero(a)) throw ZeroCondition();
  const auto& members = a.members();
  const auto first = members.find_first();
  const Scalar& s = x(first);
  for (auto i = members.find_next(first); i != AtomSet::npos;
       i = members.find_next(i)) {
    if (x(i) != s) return std::nullopt;
  }
  return s;
}

/// x <= y on every atom of a. Throws ZeroCondition for a = 0.
template <typename Scalar>
bool implied_leq(const BasicUnknown<Scalar>& x, const BasicUnknown<Scalar>& y,
                 const Proposition& a) {
  detail::require_same_space(x, y);
  if (!(x.space() == a.space())) throw SpaceMismatch();
  if (is_zero(a)) throw ZeroCondition();
  const auto& members = a.members();
  for (auto i = members.find_first(); i != AtomSet::npos;
       i = members.find_next(i)) {
    if (!(x(i) <= y(i))) return false;
  }
  return true;
}

/// "(v1,v2,...,vn)" in atom order, rationals as "p/q".
std::string to_string(const Unknown& x);

}  // namespace plausival
