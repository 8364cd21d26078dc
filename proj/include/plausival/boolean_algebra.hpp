#pragma once

// Finite Boolean algebra of propositions, realized as subsets of a set of
// atoms (possible worlds). Logical equivalence is set equality.

#include "plausival/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plausival {

using AtomSet = boost::dynamic_bitset<std::uint64_t>;
using Mask = std::uint64_t;

/// Largest space the exhaustive enumeration helpers accept.
inline constexpr std::size_t kMaxEnumerableAtoms = 12;

class AtomSpace {
 public:
  /// Throws InvalidArgument when empty or when labels repeat.
  explicit AtomSpace(std::vector<std::string> labels);

  /// Labels a1, a2, ..., an.
  static AtomSpace numbered(std::size_t n);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& label(std::size_t atom) const { return labels_->at(atom); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const AtomSpace& a, const AtomSpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

class Proposition {
 public:
  Proposition(AtomSpace space, AtomSet members);

  static Proposition zero(const AtomSpace& space);
  static Proposition one(const AtomSpace& space);
  static Proposition of(const AtomSpace& space,
                        std::initializer_list<std::size_t> atoms);
  /// Bit i of mask is atom i. Bits beyond the space are rejected.
  static Proposition from_mask(const AtomSpace& space, Mask mask);
  /// Throws InvalidArgument on unknown labels.
  static Proposition from_labels(const AtomSpace& space,
                                 const std::vector<std::string>& labels);

  const AtomSpace& space() const noexcept { return space_; }
  const AtomSet& members() const noexcept { return members_; }
  bool contains(std::size_t atom) const { return members_.test(atom); }
  std::size_t count() const noexcept { return members_.count(); }
  std::vector<std::size_t> atoms() const;
  std::vector<std::string> labels() const;

  /// Only for spaces of at most 64 atoms; throws TooLarge otherwise.
  Mask mask() const;

  friend bool operator==(const Proposition& a, const Proposition& b) {
    return a.space_ == b.space_ && a.members_ == b.members_;
  }

 private:
  AtomSpace space_;
  AtomSet members_;
};

enum class Connective { conjunction, disjunction, minus };

/// Intersection, union or difference. Throws SpaceMismatch.
Proposition connect(const Proposition& a, const Proposition& b, Connective op);
Proposition complement(const Proposition& a);
/// members(a) is a subset of members(b). Throws SpaceMismatch.
bool entails(const Proposition& a, const Proposition& b);
bool is_zero(const Proposition& a) noexcept;

inline Proposition operator&(const Proposition& a, const Proposition& b) {
  return connect(a, b, Connective::conjunction);
}
inline Proposition operator|(const Proposition& a, const Proposition& b) {
  return connect(a, b, Connective::disjunction);
}
inline Proposition operator-(const Proposition& a, const Proposition& b) {
  return connect(a, b, Connective::minus);
}
inline Proposition operator~(const Proposition& a) { return complement(a); }

/// All 2^n propositions ordered by mask. Throws TooLarge above
/// kMaxEnumerableAtoms.
std::vector<Proposition> all_propositions(const AtomSpace& space);

/// "{a1,a3}" with atoms in index order; "{}" for the zero proposition.
std::string to_string(const Proposition& a);

}  // namespace plausival
