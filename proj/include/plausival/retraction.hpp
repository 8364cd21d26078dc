#pragma once

// Retractions of finite sets and the factorization / combination rules
// they support. Elements are opaque string ids and every map is an explicit
// table, so each "depends only on" hypothesis is decided by enumeration
// instead of being assumed.

#include "plausival/error.hpp"
#include "plausival/report.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plausival {

using ElementId = std::string;

/// Ordered set of element ids. Iteration order is lexicographic, which fixes
/// the order in which witnesses are searched.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<ElementId> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const ElementId& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(const ElementId& id) const;
  bool contains(const ElementId& id) const { return index_of(id).has_value(); }
  /// Throws DomainMismatch when absent.
  std::size_t require(const ElementId& id) const;
  bool is_subset_of(const FiniteSet& other) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<ElementId> elements_;
};

/// Total map domain -> codomain.
class FiniteMap {
 public:
  /// Throws DomainMismatch unless pairs cover the domain exactly once and
  /// every image lies in the codomain.
  FiniteMap(FiniteSet domain, FiniteSet codomain,
            const std::vector<std::pair<ElementId, ElementId>>& pairs);

  const FiniteSet& domain() const noexcept { return domain_; }
  const FiniteSet& codomain() const noexcept { return codomain_; }
  const ElementId& operator()(const ElementId& t) const;
  std::size_t image_index(std::size_t domain_index) const {
    return table_[domain_index];
  }

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  FiniteSet domain_;
  FiniteSet codomain_;
  std::vector<std::size_t> table_;
};

/// Total map left x right -> codomain, written as juxtaposition t1 t2.
class BinaryMap {
 public:
  struct Entry {
    ElementId left;
    ElementId right;
    ElementId value;
  };

  /// Throws DomainMismatch unless every pair appears exactly once with its
  /// image in the codomain.
  BinaryMap(FiniteSet left, FiniteSet right, FiniteSet codomain,
            const std::vector<Entry>& entries);

  const FiniteSet& left() const noexcept { return left_; }
  const FiniteSet& right() const noexcept { return right_; }
  const FiniteSet& codomain() const noexcept { return codomain_; }
  const ElementId& operator()(const ElementId& t1, const ElementId& t2) const;
  std::size_t image_index(std::size_t i, std::size_t j) const {
    return table_[i * right_.size() + j];
  }

 private:
  FiniteSet left_;
  FiniteSet right_;
  FiniteSet codomain_;
  std::vector<std::size_t> table_;
};

/// Self-map of a carrier T with image R that fixes every point of R.
class Retraction {
 public:
  /// Throws InvalidArgument when the table is not total, leaves R, moves a
  /// point of R, or misses part of R.
  Retraction(FiniteSet carrier, FiniteSet image,
             const std::vector<std::pair<ElementId, ElementId>>& pairs);

  /// Identity on the carrier.
  static Retraction identity(const FiniteSet& carrier);

  const FiniteSet& carrier() const noexcept { return carrier_; }
  const FiniteSet& image() const noexcept { return image_; }
  const ElementId& operator()(const ElementId& t) const;
  /// Carrier index of P(t) for carrier index t.
  std::size_t apply(std::size_t t) const { return table_[t]; }

 private:
  FiniteSet carrier_;
  FiniteSet image_;
  std::vector<std::size_t> table_;
};

/// The unique h on R with h o P = f, namely f restricted to R. Throws
/// DependenceViolation(t1, t2) for the lexicographically first pair with
/// P(t1) = P(t2) but f(t1) != f(t2); DomainMismatch when f.domain differs
/// from the carrier.
FiniteMap factorize(const Retraction& p, const FiniteMap& f);

/// True iff f(t) depends only on P(t).
bool depends_only_on(const Retraction& p, const FiniteMap& f);

/// Passes iff P o f = f o P. f must map the carrier into itself
/// (DomainMismatch otherwise).
AxiomReport check_commutation(const Retraction& p, const FiniteMap& f);

/// Decides whether P3(t1 t2) depends only on (P1 t1, P2 t2) and, if so,
/// that P3(t1 t2) = P1(t1) P2(t2) everywhere. Reports unmet when
/// m(R1 x R2) is not inside R3. Throws DomainMismatch when m does not map
/// T1 x T2 into T3.
AxiomReport check_combination(const Retraction& p1, const Retraction& p2,
                              const Retraction& p3, const BinaryMap& m);

struct FixedElementReport {
  // P3(t1 e) = P3(P1(t1) e), given that P3(t1 e) depends only on P1(t1).
  AxiomReport reduction;
  // P3(t1 e) = P1(t1) P2(e), given P3(r e) = r P2(e) on R1 as well.
  AxiomReport product;
};

FixedElementReport check_fixed_element(const Retraction& p1,
                                       const Retraction& p2,
                                       const Retraction& p3,
                                       const BinaryMap& m, const ElementId& e);

}  // namespace plausival
