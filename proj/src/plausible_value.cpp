#include "plausival/plausible_value.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace plausival {

namespace {

void require_enumerable(const AtomSpace& space) {
  if (space.size() > kMaxEnumerableAtoms) {
    throw TooLarge("plausibility tables are limited to " +
                   std::to_string(kMaxEnumerableAtoms) + " atoms");
  }
}

// Base-3 digit weights: pair_index(U, V) = t3[U] + t3[V] is a bijection from
// pairs U <= V onto [0, 3^n).
std::vector<std::uint32_t> ternary_weights(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> t3(size, 0);
  std::uint32_t power = 1;
  std::vector<std::uint32_t> digit(n);
  for (std::size_t i = 0; i < n; ++i) {
    digit[i] = power;
    power *= 3;
  }
  for (std::size_t s = 1; s < size; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    t3[s] = t3[s & (s - 1)] + digit[low];
  }
  return t3;
}

std::uint32_t power_of_three(std::size_t n) {
  std::uint32_t p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 3;
  return p;
}

// Sorts values, removes repeats and returns the id of each input value.
std::vector<PLTable::Id> intern(std::vector<Rational>& values) {
  std::vector<PLTable::Id> order(values.size());
  std::iota(order.begin(), order.end(), PLTable::Id{0});
  std::sort(order.begin(), order.end(),
            [&](PLTable::Id a, PLTable::Id b) { return values[a] < values[b]; });
  std::vector<Rational> dictionary;
  std::vector<PLTable::Id> ids(values.size());
  for (const auto index : order) {
    if (dictionary.empty() || dictionary.back() != values[index]) {
      dictionary.push_back(values[index]);
    }
    ids[index] = static_cast<PLTable::Id>(dictionary.size() - 1);
  }
  values = std::move(dictionary);
  return ids;
}

}  // namespace

PLTable::PLTable(AtomSpace space, std::vector<Rational> values,
                 std::vector<Id> ids)
    : space_(std::move(space)), values_(std::move(values)), ids_(std::move(ids)) {}

PLTable PLTable::from_rule(const AtomSpace& space,
                           const std::function<Rational(Mask, Mask)>& rule) {
  require_enumerable(space);
  const Mask size = Mask{1} << space.size();
  std::map<Rational, Id> seen;
  std::vector<Rational> first_seen;
  std::vector<Id> ids(size * size, kNoEntry);
  for (Mask b = 1; b < size; ++b) {
    for (Mask a = 0; a < size; ++a) {
      Rational v = rule(a, b);
      auto [it, inserted] = seen.try_emplace(v, static_cast<Id>(first_seen.size()));
      if (inserted) first_seen.push_back(std::move(v));
      ids[b * size + a] = it->second;
    }
  }
  const auto remap = intern(first_seen);
  for (auto& id : ids) {
    if (id != kNoEntry) id = remap[id];
  }
  PLTable table(space, std::move(first_seen), std::move(ids));
  table.validate();
  table.local_ = true;
  for (Mask b = 1; b < size && table.local_; ++b) {
    for (Mask a = 0; a < size; ++a) {
      if (table.ids_[b * size + a] != table.ids_[b * size + (a & b)]) {
        table.local_ = false;
        break;
      }
    }
  }
  return table;
}

PLTable PLTable::from_local_rule(
    const AtomSpace& space, const std::function<Rational(Mask, Mask)>& rule) {
  require_enumerable(space);
  const std::size_t n = space.size();
  const Mask size = Mask{1} << n;
  const auto t3 = ternary_weights(n);
  // the pair (0, 0) is never queried and keeps the harmless value 0
  std::vector<Rational> pair_values(power_of_three(n));
  for (Mask given = 1; given < size; ++given) {
    for (Mask part = given;; part = (part - 1) & given) {
      pair_values[t3[part] + t3[given]] = rule(part, given);
      if (part == 0) break;
    }
  }
  return from_local_indexed(
      space, [&](Mask part, Mask given) { return t3[part] + t3[given]; },
      pair_values);
}

PLTable PLTable::from_local_indexed(
    const AtomSpace& space, const std::function<std::uint32_t(Mask, Mask)>& index,
    std::vector<Rational>& values) {
  require_enumerable(space);
  const std::size_t n = space.size();
  const Mask size = Mask{1} << n;
  const auto t3 = ternary_weights(n);
  std::vector<std::uint32_t> pair_index(power_of_three(n), 0);
  for (Mask given = 1; given < size; ++given) {
    // every submask of given, including 0
    for (Mask part = given;; part = (part - 1) & given) {
      pair_index[t3[part] + t3[given]] = index(part, given);
      if (part == 0) break;
    }
  }
  std::vector<Rational> dictionary = std::move(values);
  const auto remap = intern(dictionary);
  std::vector<Id> ids(size * size, kNoEntry);
  for (Mask b = 1; b < size; ++b) {
    for (Mask a = 0; a < size; ++a) {
      ids[b * size + a] = remap[pair_index[t3[a & b] + t3[b]]];
    }
  }
  PLTable table(space, std::move(dictionary), std::move(ids));
  table.validate();
  table.local_ = true;
  return table;
}

PLTable::Id PLTable::id(Mask a, Mask b) const {
  if (b == 0) throw ZeroCondition();
  const Mask size = Mask{1} << space_.size();
  if (a >= size || b >= size) throw InvalidArgument("mask outside the table");
  return ids_[b * size + a];
}

const Rational& PLTable::at(const Proposition& a, const Proposition& b) const {
  if (!(a.space() == space_) || !(b.space() == space_)) throw SpaceMismatch();
  return at(a.mask(), b.mask());
}

void PLTable::validate() const {
  // every stored id points into the dictionary, so its extremes bound all
  // entries
  if (values_.empty() || values_.front() < 0 || values_.back() > 1) {
    throw InvalidArgument("plausibility entries must lie in [0, 1]");
  }
  const auto locate = [&](const Rational& v) -> Id {
    const auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) return kNoEntry;
    return static_cast<Id>(it - values_.begin());
  };
  const Id zero = locate(Rational(0));
  const Id one = locate(Rational(1));
  const Mask size = Mask{1} << space_.size();
  for (Mask b = 1; b < size; ++b) {
    if (ids_[b * size + b] != one) {
      throw InvalidArgument("normalization row PL(B|B) = 1 is violated");
    }
    if (ids_[b * size] != zero) {
      throw InvalidArgument("normalization row PL(0|B) = 0 is violated");
    }
  }
}

PLTable pl_table(const PVModel& m) {
  const auto& space = m.space();
  require_enumerable(space);
  const std::size_t n = space.size();
  const Mask size = Mask{1} << n;
  std::vector<Rational> mass(size);
  mass[0] = 0;
  for (Mask s = 1; s < size; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    mass[s] = mass[s & (s - 1)] + m.state().weight(low);
  }
  return PLTable::from_local_rule(
      space, [&](Mask part, Mask given) { return mass[part] / mass[given]; });
}

}  // namespace plausival
