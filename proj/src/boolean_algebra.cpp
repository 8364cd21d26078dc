#include "plausival/boolean_algebra.hpp"

#include <algorithm>
#include <set>

namespace plausival {

AtomSpace::AtomSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidArgument("atom space needs at least one atom");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw InvalidArgument("atom labels must be distinct");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

AtomSpace AtomSpace::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return AtomSpace(std::move(labels));
}

std::optional<std::size_t> AtomSpace::index_of(std::string_view label) const {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

Proposition::Proposition(AtomSpace space, AtomSet members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (members_.size() != space_.size()) {
    throw InvalidArgument("proposition bitset does not match its atom space");
  }
}

Proposition Proposition::zero(const AtomSpace& space) {
  return {space, AtomSet(space.size())};
}

Proposition Proposition::one(const AtomSpace& space) {
  AtomSet all(space.size());
  all.set();
  return {space, std::move(all)};
}

Proposition Proposition::of(const AtomSpace& space,
                            std::initializer_list<std::size_t> atoms) {
  AtomSet members(space.size());
  for (const auto atom : atoms) {
    if (atom >= space.size()) throw InvalidArgument("atom index out of range");
    members.set(atom);
  }
  return {space, std::move(members)};
}

Proposition Proposition::from_mask(const AtomSpace& space, Mask mask) {
  const auto n = space.size();
  if (n < 64 && (mask >> n) != 0) {
    throw InvalidArgument("mask has bits beyond the atom space");
  }
  AtomSet members(n);
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    if ((mask >> i) & 1U) members.set(i);
  }
  return {space, std::move(members)};
}

Proposition Proposition::from_labels(const AtomSpace& space,
                                     const std::vector<std::string>& labels) {
  AtomSet members(space.size());
  for (const auto& label : labels) {
    const auto index = space.index_of(label);
    if (!index) throw InvalidArgument("unknown atom label '" + label + "'");
    members.set(*index);
  }
  return {space, std::move(members)};
}

std::vector<std::size_t> Proposition::atoms() const {
  std::vector<std::size_t> out;
  out.reserve(members_.count());
  for (auto i = members_.find_first(); i != AtomSet::npos;
       i = members_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

std::vector<std::string> Proposition::labels() const {
  std::vector<std::string> out;
  for (const auto i : atoms()) out.push_back(space_.label(i));
  return out;
}

Mask Proposition::mask() const {
  if (space_.size() > 64) throw TooLarge("mask needs at most 64 atoms");
  Mask m = 0;
  for (auto i = members_.find_first(); i != AtomSet::npos;
       i = members_.find_next(i)) {
    m |= Mask{1} << i;
  }
  return m;
}

Proposition connect(const Proposition& a, const Proposition& b,
                    Connective op) {
  if (!(a.space() == b.space())) throw SpaceMismatch();
  switch (op) {
    case Connective::conjunction:
      return {a.space(), a.members() & b.members()};
    case Connective::disjunction:
      return {a.space(), a.members() | b.members()};
    case Connective::minus:
      return {a.space(), a.members() - b.members()};
  }
  throw InvalidArgument("unknown connective");
}

Proposition complement(const Proposition& a) {
  return {a.space(), ~a.members()};
}

bool entails(const Proposition& a, const Proposition& b) {
  if (!(a.space() == b.space())) throw SpaceMismatch();
  return a.members().is_subset_of(b.members());
}

bool is_zero(const Proposition& a) noexcept { return a.members().none(); }

std::vector<Proposition> all_propositions(const AtomSpace& space) {
  if (space.size() > kMaxEnumerableAtoms) {
    throw TooLarge("enumeration is limited to " +
                   std::to_string(kMaxEnumerableAtoms) + " atoms");
  }
  const Mask count = Mask{1} << space.size();
  std::vector<Proposition> out;
  out.reserve(count);
  for (Mask m = 0; m < count; ++m) out.push_back(Proposition::from_mask(space, m));
  return out;
}

std::string to_string(const Proposition& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : a.labels()) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  return out + "}";
}

}  // namespace plausival
