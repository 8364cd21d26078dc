#include "plausival/retraction.hpp"

#include <algorithm>
#include <map>

namespace plausival {

namespace {

nlohmann::json pair_json(const ElementId& a, const ElementId& b) {
  return nlohmann::json::array({a, b});
}

}  // namespace

FiniteSet::FiniteSet(std::vector<ElementId> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

std::optional<std::size_t> FiniteSet::index_of(const ElementId& id) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), id);
  if (it == elements_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteSet::require(const ElementId& id) const {
  const auto index = index_of(id);
  if (!index) throw DomainMismatch("element '" + id + "' is not in the set");
  return *index;
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

FiniteMap::FiniteMap(FiniteSet domain, FiniteSet codomain,
                     const std::vector<std::pair<ElementId, ElementId>>& pairs)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      table_(domain_.size(), codomain_.size()) {
  for (const auto& [from, to] : pairs) {
    const auto i = domain_.require(from);
    if (table_[i] != codomain_.size()) {
      throw DomainMismatch("element '" + from + "' is mapped twice");
    }
    table_[i] = codomain_.require(to);
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == codomain_.size()) {
      throw DomainMismatch("map is not total: '" + domain_[i] + "' has no image");
    }
  }
}

const ElementId& FiniteMap::operator()(const ElementId& t) const {
  return codomain_[table_[domain_.require(t)]];
}

BinaryMap::BinaryMap(FiniteSet left, FiniteSet right, FiniteSet codomain,
                     const std::vector<Entry>& entries)
    : left_(std::move(left)),
      right_(std::move(right)),
      codomain_(std::move(codomain)),
      table_(left_.size() * right_.size(), codomain_.size()) {
  for (const auto& entry : entries) {
    const auto i = left_.require(entry.left);
    const auto j = right_.require(entry.right);
    auto& slot = table_[i * right_.size() + j];
    if (slot != codomain_.size()) {
      throw DomainMismatch("pair ('" + entry.left + "', '" + entry.right +
                           "') is mapped twice");
    }
    slot = codomain_.require(entry.value);
  }
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k] == codomain_.size()) {
      throw DomainMismatch("binary map is not total");
    }
  }
}

const ElementId& BinaryMap::operator()(const ElementId& t1,
                                       const ElementId& t2) const {
  return codomain_[image_index(left_.require(t1), right_.require(t2))];
}

Retraction::Retraction(FiniteSet carrier, FiniteSet image,
                       const std::vector<std::pair<ElementId, ElementId>>& pairs)
    : carrier_(std::move(carrier)), image_(std::move(image)) {
  if (!image_.is_subset_of(carrier_)) {
    throw InvalidArgument("retraction image must lie in the carrier");
  }
  // elements of the image that are not listed map to themselves
  table_.assign(carrier_.size(), carrier_.size());
  for (const auto& [from, to] : pairs) {
    const auto i = carrier_.index_of(from);
    if (!i) throw InvalidArgument("'" + from + "' is not in the carrier");
    if (!image_.contains(to)) {
      throw InvalidArgument("'" + to + "' is not in the image");
    }
    if (table_[*i] != carrier_.size()) {
      throw InvalidArgument("'" + from + "' is mapped twice");
    }
    table_[*i] = *carrier_.index_of(to);
  }
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    const bool in_image = image_.contains(carrier_[i]);
    if (table_[i] == carrier_.size()) {
      if (!in_image) {
        throw InvalidArgument("retraction is not total: '" + carrier_[i] +
                              "' has no image");
      }
      table_[i] = i;
    } else if (in_image && table_[i] != i) {
      throw InvalidArgument("retraction moves the fixed point '" +
                            carrier_[i] + "'");
    }
  }
}

Retraction Retraction::identity(const FiniteSet& carrier) {
  return Retraction(carrier, carrier, {});
}

const ElementId& Retraction::operator()(const ElementId& t) const {
  const auto i = carrier_.index_of(t);
  if (!i) throw DomainMismatch("'" + t + "' is not in the carrier");
  return carrier_[table_[*i]];
}

namespace {

// Lexicographically first (t1, t2), t1 < t2, with P(t1) = P(t2) and
// f(t1) != f(t2).
std::optional<std::pair<std::size_t, std::size_t>> first_fiber_violation(
    const Retraction& p, const FiniteMap& f) {
  const auto n = p.carrier().size();
  for (std::size_t t1 = 0; t1 < n; ++t1) {
    for (std::size_t t2 = t1 + 1; t2 < n; ++t2) {
      if (p.apply(t1) == p.apply(t2) && f.image_index(t1) != f.image_index(t2)) {
        return std::pair{t1, t2};
      }
    }
  }
  return std::nullopt;
}

void require_domain(const Retraction& p, const FiniteMap& f) {
  if (!(f.domain() == p.carrier())) {
    throw DomainMismatch("map domain differs from the retraction carrier");
  }
}

}  // namespace

bool depends_only_on(const Retraction& p, const FiniteMap& f) {
  require_domain(p, f);
  return !first_fiber_violation(p, f).has_value();
}

FiniteMap factorize(const Retraction& p, const FiniteMap& f) {
  require_domain(p, f);
  if (const auto bad = first_fiber_violation(p, f)) {
    throw DependenceViolation(p.carrier()[bad->first], p.carrier()[bad->second]);
  }
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& r : p.image()) pairs.emplace_back(r, f(r));
  return FiniteMap(p.image(), f.codomain(), pairs);
}

AxiomReport check_commutation(const Retraction& p, const FiniteMap& f) {
  require_domain(p, f);
  if (!(f.codomain() == p.carrier())) {
    throw DomainMismatch("commutation needs a map of the carrier into itself");
  }
  AxiomReport report;
  report.subject = "commutation";
  const auto& carrier = p.carrier();
  for (std::size_t t = 0; t < carrier.size(); ++t) {
    ++report.cases_checked;
    const auto pf = p.apply(f.image_index(t));
    const auto fp = f.image_index(p.apply(t));
    if (pf != fp && report.verdict == Verdict::pass) {
      report.verdict = Verdict::fail;
      report.witness = nlohmann::json{{"t", carrier[t]},
                                      {"lhs", carrier[pf]},
                                      {"rhs", carrier[fp]},
                                      {"relation", "P(f(t)) == f(P(t))"}};
    }
  }
  bool preserves_image = true;
  for (const auto& r : p.image()) {
    preserves_image = preserves_image && p.image().contains(f(r));
  }
  if (!preserves_image) report.note = "f does not map the image into itself";
  return report;
}

namespace {

void require_binary(const Retraction& p1, const Retraction& p2,
                    const Retraction& p3, const BinaryMap& m) {
  if (!(m.left() == p1.carrier()) || !(m.right() == p2.carrier()) ||
      !(m.codomain() == p3.carrier())) {
    throw DomainMismatch("binary map must send T1 x T2 into T3");
  }
}

}  // namespace

AxiomReport check_combination(const Retraction& p1, const Retraction& p2,
                              const Retraction& p3, const BinaryMap& m) {
  require_binary(p1, p2, p3, m);
  AxiomReport report;
  report.subject = "combination";
  const auto& t1s = p1.carrier();
  const auto& t2s = p2.carrier();
  const auto& t3s = p3.carrier();

  for (const auto& r1 : p1.image()) {
    for (const auto& r2 : p2.image()) {
      if (!p3.image().contains(m(r1, r2))) {
        report.verdict = Verdict::unmet;
        report.note = "m(R1 x R2) is not contained in R3";
        report.witness = nlohmann::json{{"r1", r1}, {"r2", r2}, {"m", m(r1, r2)}};
        return report;
      }
    }
  }

  // (P1 t1, P2 t2) -> first pair seen and its P3(t1 t2)
  std::map<std::pair<std::size_t, std::size_t>,
           std::pair<std::pair<std::size_t, std::size_t>, std::size_t>>
      seen;
  for (std::size_t i = 0; i < t1s.size(); ++i) {
    for (std::size_t j = 0; j < t2s.size(); ++j) {
      const auto key = std::pair{p1.apply(i), p2.apply(j)};
      const auto value = p3.apply(m.image_index(i, j));
      const auto [it, inserted] = seen.try_emplace(key, std::pair{i, j}, value);
      if (!inserted && it->second.second != value) {
        const auto [fi, fj] = it->second.first;
        report.verdict = Verdict::fail;
        report.note = "dependence violation";
        report.witness = nlohmann::json{
            {"first", pair_json(t1s[fi], t2s[fj])},
            {"second", pair_json(t1s[i], t2s[j])},
            {"first_value", t3s[it->second.second]},
            {"second_value", t3s[value]}};
        return report;
      }
    }
  }

  for (std::size_t i = 0; i < t1s.size(); ++i) {
    for (std::size_t j = 0; j < t2s.size(); ++j) {
      ++report.cases_checked;
      const auto lhs = p3.apply(m.image_index(i, j));
      const auto rhs = *t3s.index_of(
          m(t1s[p1.apply(i)], t2s[p2.apply(j)]));
      if (lhs != rhs) {
        report.verdict = Verdict::fail;
        report.witness = nlohmann::json{{"t1", t1s[i]},
                                        {"t2", t2s[j]},
                                        {"lhs", t3s[lhs]},
                                        {"rhs", t3s[rhs]},
                                        {"relation", "P3(t1 t2) == P1(t1) P2(t2)"}};
        return report;
      }
    }
  }
  return report;
}

FixedElementReport check_fixed_element(const Retraction& p1,
                                       const Retraction& p2,
                                       const Retraction& p3,
                                       const BinaryMap& m, const ElementId& e) {
  require_binary(p1, p2, p3, m);
  const auto e_index = p2.carrier().index_of(e);
  if (!e_index) throw DomainMismatch("'" + e + "' is not in T2");
  const auto& t1s = p1.carrier();
  const auto& t3s = p3.carrier();
  const auto& pe = p2.carrier()[p2.apply(*e_index)];

  FixedElementReport out;
  out.reduction.subject = "fixed_element_reduction";
  out.product.subject = "fixed_element_product";

  // P3(t1 e) as a carrier index of T3
  const auto image_of = [&](std::size_t i) {
    return p3.apply(m.image_index(i, *e_index));
  };

  std::map<std::size_t, std::size_t> first_in_fiber;
  for (std::size_t i = 0; i < t1s.size(); ++i) {
    const auto [it, inserted] = first_in_fiber.try_emplace(p1.apply(i), i);
    if (!inserted && image_of(it->second) != image_of(i)) {
      out.reduction.verdict = Verdict::fail;
      out.reduction.note = "dependence violation";
      out.reduction.witness =
          nlohmann::json{{"first", t1s[it->second]},
                         {"second", t1s[i]},
                         {"first_value", t3s[image_of(it->second)]},
                         {"second_value", t3s[image_of(i)]}};
      out.product.verdict = Verdict::unmet;
      out.product.note = "P3(t1 e) does not depend only on P1(t1)";
      return out;
    }
  }

  for (std::size_t i = 0; i < t1s.size(); ++i) {
    ++out.reduction.cases_checked;
    const auto lhs = image_of(i);
    const auto rhs = image_of(p1.apply(i));
    if (lhs != rhs && out.reduction.verdict == Verdict::pass) {
      out.reduction.verdict = Verdict::fail;
      out.reduction.witness = nlohmann::json{
          {"t1", t1s[i]},
          {"lhs", t3s[lhs]},
          {"rhs", t3s[rhs]},
          {"relation", "P3(t1 e) == P3(P1(t1) e)"}};
    }
  }

  for (const auto& r : p1.image()) {
    const auto& produced = m(r, pe);
    if (p3(m(r, e)) != produced) {
      out.product.verdict = Verdict::unmet;
      out.product.note = "hypothesis not satisfied: P3(r e) != r P2(e)";
      out.product.witness = nlohmann::json{
          {"r", r}, {"lhs", p3(m(r, e))}, {"rhs", produced}};
      return out;
    }
  }

  for (std::size_t i = 0; i < t1s.size(); ++i) {
    ++out.product.cases_checked;
    const auto& lhs = t3s[image_of(i)];
    const auto& rhs = m(t1s[p1.apply(i)], pe);
    if (lhs != rhs && out.product.verdict == Verdict::pass) {
      out.product.verdict = Verdict::fail;
      out.product.witness = nlohmann::json{{"t1", t1s[i]},
                                           {"lhs", lhs},
                                           {"rhs", rhs},
                                           {"relation", "P3(t1 e) == P1(t1) P2(e)"}};
    }
  }
  return out;
}

}  // namespace plausival
