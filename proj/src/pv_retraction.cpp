#include "plausival/pv_retraction.hpp"

#include <map>
#include <string>
#include <utility>

namespace plausival {

namespace {

// Carrier built from unknowns, keyed by their canonical text.
class Carrier {
 public:
  const ElementId& add(const Unknown& x) {
    return elements_.try_emplace(to_string(x), x).first->first;
  }
  const std::map<ElementId, Unknown>& elements() const { return elements_; }

  FiniteSet set() const {
    std::vector<ElementId> ids;
    for (const auto& [id, x] : elements_) ids.push_back(id);
    return FiniteSet(std::move(ids));
  }

 private:
  std::map<ElementId, Unknown> elements_;
};

// Retraction t -> PV(t|c) as a constant unknown. The carrier must already
// hold every such constant.
Retraction pv_retraction(const PVModel& m, const Carrier& carrier,
                         const Proposition& c) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  std::vector<ElementId> image;
  for (const auto& [id, x] : carrier.elements()) {
    auto value = to_string(Unknown::constant(m.space(), pv(m, x, c)));
    image.push_back(value);
    pairs.emplace_back(id, std::move(value));
  }
  return Retraction(carrier.set(), FiniteSet(std::move(image)), pairs);
}

}  // namespace

RetractionInstance product_rule_instance(const PVModel& m,
                                         const std::vector<Unknown>& xs,
                                         const Proposition& a,
                                         const Proposition& c) {
  const auto ac = a & c;
  if (is_zero(ac) || is_zero(c)) throw ZeroCondition();
  const auto& space = m.space();

  Carrier t1;
  for (const auto& x : xs) {
    t1.add(x);
    t1.add(Unknown::constant(space, pv(m, x, ac)));
  }
  const auto ind = indicator(a);
  Carrier t2;
  const auto e = t2.add(ind);
  t2.add(Unknown::constant(space, pl(m, a, c)));

  Carrier t3;
  std::vector<BinaryMap::Entry> entries;
  for (const auto& [id1, x1] : t1.elements()) {
    for (const auto& [id2, x2] : t2.elements()) {
      const auto product = x1 * x2;
      entries.push_back({id1, id2, t3.add(product)});
      t3.add(Unknown::constant(space, pv(m, product, c)));
    }
  }

  return RetractionInstance{pv_retraction(m, t1, ac), pv_retraction(m, t2, c),
                            pv_retraction(m, t3, c),
                            BinaryMap(t1.set(), t2.set(), t3.set(), entries), e};
}

}  // namespace plausival
