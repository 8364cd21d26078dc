#include "plausival/cox_lab.hpp"

#include "plausival/json_io.hpp"
#include "plausival/parallel.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <string>
#include <utility>

namespace plausival {

namespace {

using Id = UniversalFunction::Id;
using Point = UniversalFunction::Point;

bool point_less(const Point& a, const Point& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// Values with numerator and denominator below 2^40 are compared through
// 128-bit cross products; anything larger falls back to GMP.
class FastValues {
 public:
  explicit FastValues(const std::vector<Rational>& values) : values_(values) {
    small_.reserve(values.size());
    const Integer limit = Integer(1) << 40;
    for (const auto& v : values) {
      const auto num = boost::multiprecision::numerator(v);
      const auto den = boost::multiprecision::denominator(v);
      if (abs(num) < limit && den < limit) {
        small_.push_back({num.convert_to<std::int64_t>(),
                          den.convert_to<std::int64_t>(), true});
      } else {
        small_.push_back({0, 1, false});
      }
    }
  }

  // z == x * y
  bool is_product(Id x, Id y, Id z) const {
    const auto &a = small_[x], &b = small_[y], &c = small_[z];
    if (a.ok && b.ok && c.ok) {
      return static_cast<__int128>(a.num) * b.num * c.den ==
             static_cast<__int128>(c.num) * a.den * b.den;
    }
    return values_[z] == values_[x] * values_[y];
  }

  // z1 / x1 == z2 / x2, for nonzero x1, x2
  bool same_ratio(Id z1, Id x1, Id z2, Id x2) const {
    const auto &a = small_[z1], &b = small_[x1], &c = small_[z2], &d = small_[x2];
    if (a.ok && b.ok && c.ok && d.ok) {
      return static_cast<__int128>(a.num) * d.num * b.den * c.den ==
             static_cast<__int128>(c.num) * b.num * a.den * d.den;
    }
    return values_[z1] * values_[x2] == values_[z2] * values_[x1];
  }

  bool is_zero(Id v) const { return values_[v] == 0; }

 private:
  struct Small {
    std::int64_t num;
    std::int64_t den;
    bool ok;
  };
  const std::vector<Rational>& values_;
  std::vector<Small> small_;
};

// Stable bucket sort of point indices by one coordinate.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> bucket_by(
    const std::vector<Point>& points, std::size_t id_count, Id Point::*field) {
  std::vector<std::uint32_t> offsets(id_count + 1, 0);
  for (const auto& p : points) ++offsets[p.*field + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<std::uint32_t> order(points.size());
  auto cursor = offsets;
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    order[cursor[points[i].*field]++] = i;
  }
  return {std::move(order), std::move(offsets)};
}

// Point lookup and the indexes the associativity and homogeneity checks
// walk: rows by first coordinate (points are already sorted that way),
// slices by second coordinate, and points grouped by value.
struct Indexed {
  explicit Indexed(const UniversalFunction& f)
      : f(f), fast(f.values()), row(f.values().size() + 1, 0) {
    const auto& points = f.points();
    for (const auto& p : points) ++row[p.x + 1];
    std::partial_sum(row.begin(), row.end(), row.begin());
  }

  std::optional<std::uint32_t> find(Id x, Id y) const {
    const auto& points = f.points();
    const auto begin = points.begin() + row[x];
    const auto end = points.begin() + row[x + 1];
    const auto it = std::lower_bound(
        begin, end, y, [](const Point& p, Id key) { return p.y < key; });
    if (it == end || it->y != y) return std::nullopt;
    return static_cast<std::uint32_t>(it - points.begin());
  }

  const UniversalFunction& f;
  FastValues fast;
  std::vector<std::uint32_t> row;
};

json rational_json(const UniversalFunction& f, Id id) {
  return to_json(f.value(id));
}

struct Violation {
  Id x, y, w;  // the triple
  std::uint32_t p1, p2, p3, p4;  // (x,y)->u, (u,w)->v, (y,w)->s, (x,s)->v'
  bool operator<(const Violation& o) const {
    return std::tie(x, y, w) < std::tie(o.x, o.y, o.w);
  }
};

AxiomReport associativity_report(const Indexed& ix,
                                 std::optional<Violation> violation,
                                 std::size_t checked, bool anchored) {
  AxiomReport report;
  report.subject = "associativity";
  report.cases_checked = checked;
  if (anchored) {
    report.note =
        "checked the realized triples that involve a non-product point; "
        "triples of product points associate";
  }
  if (!violation) return report;
  const auto& f = ix.f;
  const auto& pts = f.points();
  const auto& v = *violation;
  report.verdict = Verdict::fail;
  report.witness = json{
      {"x", rational_json(f, v.x)},
      {"y", rational_json(f, v.y)},
      {"z", rational_json(f, v.w)},
      {"F(x,y)", rational_json(f, pts[v.p1].z)},
      {"F(y,z)", rational_json(f, pts[v.p3].z)},
      {"F(F(x,y),z)", rational_json(f, pts[v.p2].z)},
      {"F(x,F(y,z))", rational_json(f, pts[v.p4].z)},
  };
  return report;
}

AxiomReport associativity_full(const Indexed& ix) {
  const auto& pts = ix.f.points();
  std::size_t checked = 0;
  for (std::uint32_t p1 = 0; p1 < pts.size(); ++p1) {
    const auto [x, y, u] = pts[p1];
    for (auto p3 = ix.row[y]; p3 < ix.row[y + 1]; ++p3) {
      const Id w = pts[p3].y;
      const Id s = pts[p3].z;
      const auto p2 = ix.find(u, w);
      if (!p2) continue;
      const auto p4 = ix.find(x, s);
      if (!p4) continue;
      ++checked;
      if (pts[*p2].z != pts[*p4].z) {
        return associativity_report(ix, Violation{x, y, w, p1, *p2, p3, *p4},
                                    checked, false);
      }
    }
  }
  return associativity_report(ix, std::nullopt, checked, false);
}

// Every realized triple made only of product points associates, since both
// groupings equal x y w. Each triple with a non-product point is visited
// once, from the first of its four points that is non-product.
AxiomReport associativity_anchored(const Indexed& ix) {
  const auto& f = ix.f;
  const auto& pts = f.points();
  const auto id_count = f.values().size();
  std::vector<bool> odd(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    odd[i] = !ix.fast.is_product(pts[i].x, pts[i].y, pts[i].z);
  }
  const auto [by_second, second_offsets] = bucket_by(pts, id_count, &Point::y);
  const auto [by_value, value_offsets] = bucket_by(pts, id_count, &Point::z);

  std::optional<Violation> best;
  std::size_t checked = 0;
  const auto consider = [&](std::uint32_t p1, std::uint32_t p2, std::uint32_t p3,
                            std::uint32_t p4) {
    ++checked;
    if (pts[p2].z == pts[p4].z) return;
    const Violation v{pts[p1].x, pts[p1].y, pts[p2].y, p1, p2, p3, p4};
    if (!best || v < *best) best = v;
  };

  for (std::uint32_t a = 0; a < pts.size(); ++a) {
    if (!odd[a]) continue;
    const auto [ax, ay, az] = pts[a];
    // a as (x,y)->u
    for (auto p3 = ix.row[ay]; p3 < ix.row[ay + 1]; ++p3) {
      const auto p2 = ix.find(az, pts[p3].y);
      if (!p2) continue;
      const auto p4 = ix.find(ax, pts[p3].z);
      if (p4) consider(a, *p2, p3, *p4);
    }
    // a as (u,w)->v
    for (auto k = value_offsets[ax]; k < value_offsets[ax + 1]; ++k) {
      const auto p1 = by_value[k];
      if (odd[p1]) continue;
      const auto p3 = ix.find(pts[p1].y, ay);
      if (!p3) continue;
      const auto p4 = ix.find(pts[p1].x, pts[*p3].z);
      if (p4) consider(p1, a, *p3, *p4);
    }
    // a as (y,w)->s
    for (auto k = second_offsets[ax]; k < second_offsets[ax + 1]; ++k) {
      const auto p1 = by_second[k];
      if (odd[p1]) continue;
      const auto p2 = ix.find(pts[p1].z, ay);
      if (!p2 || odd[*p2]) continue;
      const auto p4 = ix.find(pts[p1].x, az);
      if (p4) consider(p1, *p2, a, *p4);
    }
    // a as (x,s)->v'
    for (auto k = value_offsets[ay]; k < value_offsets[ay + 1]; ++k) {
      const auto p3 = by_value[k];
      if (odd[p3]) continue;
      const auto p1 = ix.find(ax, pts[p3].x);
      if (!p1 || odd[*p1]) continue;
      const auto p2 = ix.find(pts[*p1].z, pts[p3].y);
      if (p2 && !odd[*p2]) consider(*p1, *p2, p3, a);
    }
  }
  return associativity_report(ix, best, checked, true);
}

// Above this many candidate (point, row entry) pairs the anchored walk is
// used instead of the exhaustive one.
constexpr std::size_t kFullAssociativityBudget = 20'000'000;

AxiomReport associativity(const Indexed& ix) {
  std::size_t work = 0;
  for (const auto& p : ix.f.points()) {
    work += ix.row[p.y + 1] - ix.row[p.y];
    if (work > kFullAssociativityBudget) return associativity_anchored(ix);
  }
  return associativity_full(ix);
}

AxiomReport homogeneity(const Indexed& ix) {
  const auto& f = ix.f;
  const auto& pts = f.points();
  AxiomReport report;
  report.subject = "first_arg_homogeneity";
  const auto [by_second, offsets] = bucket_by(pts, f.values().size(), &Point::y);
  for (Id y = 0; y + 1 < offsets.size(); ++y) {
    const auto begin = offsets[y];
    const auto end = offsets[y + 1];
    std::optional<std::uint32_t> base;
    for (auto k = begin; k < end; ++k) {
      if (!ix.fast.is_zero(pts[by_second[k]].x)) {
        base = by_second[k];
        break;
      }
    }
    if (!base) continue;
    const auto [x0, y0, z0] = pts[*base];
    for (auto k = begin; k < end; ++k) {
      const auto i = by_second[k];
      if (i == *base) continue;
      ++report.cases_checked;
      const auto [x, yy, z] = pts[i];
      const bool holds = ix.fast.is_zero(x) ? ix.fast.is_zero(z)
                                            : ix.fast.same_ratio(z, x, z0, x0);
      if (holds) continue;
      const Rational r = f.value(x) / f.value(x0);
      report.verdict = Verdict::fail;
      report.witness = json{
          {"x", rational_json(f, x0)},
          {"r", to_json(r)},
          {"y", rational_json(f, y)},
          {"F(x,y)", rational_json(f, z0)},
          {"F(rx,y)", rational_json(f, z)},
          {"rF(x,y)", to_json(r * f.value(z0))},
      };
      return report;
    }
  }
  return report;
}

// Open addressing map from (x, y) to the first (z, triple) seen.
class PointTable {
 public:
  struct Slot {
    std::uint64_t key = 0;  // (x << 32 | y) + 1, 0 = empty
    std::uint64_t payload = 0;  // triple << 28 | z
  };

  PointTable() : slots_(std::size_t{1} << 16) {}

  // Returns the slot already holding (x, y), or nullptr after inserting.
  const Slot* insert(Id x, Id y, Id z, std::uint64_t triple) {
    if ((count_ + 1) * 10 > slots_.size() * 7) grow();
    const std::uint64_t key = ((std::uint64_t{x} << 32) | y) + 1;
    auto i = hash(key) & (slots_.size() - 1);
    while (slots_[i].key != 0) {
      if (slots_[i].key == key) return &slots_[i];
      i = (i + 1) & (slots_.size() - 1);
    }
    slots_[i] = {key, (triple << 28) | z};
    ++count_;
    return nullptr;
  }

  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t size() const { return count_; }

 private:
  static std::uint64_t hash(std::uint64_t k) {
    k ^= k >> 30;
    k *= 0xbf58476d1ce4e5b9ULL;
    k ^= k >> 27;
    k *= 0x94d049bb133111ebULL;
    return k ^ (k >> 31);
  }

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    for (const auto& s : old) {
      if (s.key == 0) continue;
      auto i = hash(s.key) & (slots_.size() - 1);
      while (slots_[i].key != 0) i = (i + 1) & (slots_.size() - 1);
      slots_[i] = s;
    }
  }

  std::vector<Slot> slots_;
  std::size_t count_ = 0;
};

constexpr std::uint64_t pack_triple(Mask a, Mask b, Mask c) {
  return (std::uint64_t{a} << 24) | (std::uint64_t{b} << 12) | c;
}

constexpr Triple unpack_triple(std::uint64_t t) {
  return {static_cast<Mask>(t >> 24), static_cast<Mask>((t >> 12) & 0xfff),
          static_cast<Mask>(t & 0xfff)};
}

constexpr std::size_t kMaxGeneralAtoms = 8;

}  // namespace

UniversalFunction UniversalFunction::from_points(
    const std::vector<std::array<Rational, 3>>& points) {
  std::vector<Rational> values;
  for (const auto& p : points) values.insert(values.end(), p.begin(), p.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const auto id = [&](const Rational& v) {
    return static_cast<Id>(std::lower_bound(values.begin(), values.end(), v) -
                           values.begin());
  };
  std::vector<Point> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back({id(p[0]), id(p[1]), id(p[2])});
  std::stable_sort(pts.begin(), pts.end(), point_less);
  std::vector<Point> unique;
  for (const auto& p : pts) {
    if (!unique.empty() && unique.back().x == p.x && unique.back().y == p.y) {
      if (unique.back().z != p.z) {
        throw InvalidArgument("universal function point (" +
                              to_string(values[p.x]) + ", " +
                              to_string(values[p.y]) + ") has two values");
      }
      continue;
    }
    unique.push_back(p);
  }
  return UniversalFunction(
      std::make_shared<const std::vector<Rational>>(std::move(values)),
      std::move(unique), {});
}

UniversalFunction::UniversalFunction(
    std::shared_ptr<const std::vector<Rational>> values, std::vector<Point> points,
    std::vector<Triple> provenance)
    : values_(std::move(values)),
      points_(std::move(points)),
      provenance_(std::move(provenance)) {
  if (!provenance_.empty() && provenance_.size() != points_.size()) {
    throw InvalidArgument("provenance must list one triple per point");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    const auto limit = values_->size();
    if (p.x >= limit || p.y >= limit || p.z >= limit) {
      throw InvalidArgument("universal function point outside its values");
    }
    if (i > 0 && !point_less(points_[i - 1], p)) {
      throw InvalidArgument("universal function points must be sorted and unique");
    }
  }
}

std::optional<UniversalFunction::Id> UniversalFunction::id_of(
    const Rational& v) const {
  const auto it = std::lower_bound(values_->begin(), values_->end(), v);
  if (it == values_->end() || *it != v) return std::nullopt;
  return static_cast<Id>(it - values_->begin());
}

std::optional<UniversalFunction::Id> UniversalFunction::find(Id x, Id y) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), Point{x, y, 0},
                                   point_less);
  if (it == points_.end() || it->x != x || it->y != y) return std::nullopt;
  return it->z;
}

std::optional<Rational> UniversalFunction::at(const Rational& x,
                                              const Rational& y) const {
  const auto ix = id_of(x);
  const auto iy = id_of(y);
  if (!ix || !iy) return std::nullopt;
  const auto z = find(*ix, *iy);
  if (!z) return std::nullopt;
  return value(*z);
}

bool UniversalFunction::is_product(const Point& p) const {
  return value(p.z) == value(p.x) * value(p.y);
}

Extraction extract_universal_function(const PLTable& table) {
  const auto n = table.atom_count();
  const Mask size = Mask{1} << n;
  if (!table.local() && n > kMaxGeneralAtoms) {
    throw TooLarge("tables that are not local are limited to " +
                   std::to_string(kMaxGeneralAtoms) + " atoms");
  }
  PointTable seen;
  std::optional<FunctionConflict> conflict;
  const auto record = [&](Id x, Id y, Id z, Mask a, Mask b, Mask c) {
    const auto* slot = seen.insert(x, y, z, pack_triple(a, b, c));
    if (slot == nullptr) return true;
    const Id other = static_cast<Id>(slot->payload & ((1u << 28) - 1));
    if (other == z) return true;
    conflict = FunctionConflict{unpack_triple(slot->payload >> 28),
                                Triple{a, b, c},
                                table.values()[x],
                                table.values()[y],
                                table.values()[other],
                                table.values()[z]};
    return false;
  };

  if (table.local()) {
    // PL(A|B&C) = t(D, B'), PL(B|C) = t(B', C), PL(A&B|C) = t(D, C) with
    // B' = B&C and D = A&B', so chains D <= B' <= C realize every point.
    for (Mask c = 1; c < size; ++c) {
      for (Mask b = c; b != 0; b = (b - 1) & c) {
        const Id y = table.id_unchecked(b, c);
        for (Mask d = b;; d = (d - 1) & b) {
          if (!record(table.id_unchecked(d, b), y, table.id_unchecked(d, c), d, b,
                      c)) {
            return *conflict;
          }
          if (d == 0) break;
        }
      }
    }
  } else {
    for (Mask c = 1; c < size; ++c) {
      for (Mask b = 0; b < size; ++b) {
        const Mask bc = b & c;
        if (bc == 0) continue;
        const Id y = table.id_unchecked(b, c);
        for (Mask a = 0; a < size; ++a) {
          if (!record(table.id_unchecked(a, bc), y, table.id_unchecked(a & b, c),
                      a, b, c)) {
            return *conflict;
          }
        }
      }
    }
  }

  std::vector<std::pair<Point, std::uint64_t>> collected;
  collected.reserve(seen.size());
  for (const auto& slot : seen.slots()) {
    if (slot.key == 0) continue;
    const auto key = slot.key - 1;
    collected.push_back({Point{static_cast<Id>(key >> 32),
                               static_cast<Id>(key & 0xffffffffu),
                               static_cast<Id>(slot.payload & ((1u << 28) - 1))},
                         slot.payload >> 28});
  }
  std::sort(collected.begin(), collected.end(),
            [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  std::vector<Point> points;
  std::vector<Triple> provenance;
  points.reserve(collected.size());
  provenance.reserve(collected.size());
  for (const auto& [p, t] : collected) {
    points.push_back(p);
    provenance.push_back(unpack_triple(t));
  }
  return UniversalFunction(std::make_shared<const std::vector<Rational>>(table.values()),
                           std::move(points), std::move(provenance));
}

AxiomReport check_associativity(const UniversalFunction& f) {
  return associativity(Indexed(f));
}

AxiomReport check_first_arg_homogeneity(const UniversalFunction& f) {
  return homogeneity(Indexed(f));
}

AxiomReport homogeneity_implies_product(const UniversalFunction& f) {
  AxiomReport report;
  report.subject = "homogeneity_implies_product";
  const Indexed ix(f);
  const auto homogeneous = homogeneity(ix);
  if (!homogeneous.passed()) {
    report.verdict = Verdict::unmet;
    report.note = "precondition unmet: first-argument homogeneity fails";
    report.witness = homogeneous.witness;
    return report;
  }
  const auto one = f.id_of(Rational(1));
  const auto& pts = f.points();
  if (one) {
    for (auto i = ix.row[*one]; i < ix.row[*one + 1]; ++i) {
      if (pts[i].z != pts[i].y) {
        report.verdict = Verdict::unmet;
        report.note = "precondition unmet: unit row F(1,y) = y fails";
        report.witness = json{{"y", rational_json(f, pts[i].y)},
                              {"F(1,y)", rational_json(f, pts[i].z)}};
        return report;
      }
    }
  }
  for (const auto& p : pts) {
    ++report.cases_checked;
    if (!ix.fast.is_product(p.x, p.y, p.z)) {
      report.verdict = Verdict::fail;
      report.witness = json{{"x", rational_json(f, p.x)},
                            {"y", rational_json(f, p.y)},
                            {"F(x,y)", rational_json(f, p.z)},
                            {"xy", to_json(f.value(p.x) * f.value(p.y))}};
      return report;
    }
  }
  return report;
}

PLTable glue_two_distributions(const WeightState& mu1, const WeightState& mu2,
                               const Proposition& second_block) {
  if (!(mu1.space() == mu2.space()) || !(second_block.space() == mu1.space())) {
    throw SpaceMismatch();
  }
  const auto& space = mu1.space();
  if (space.size() > kMaxEnumerableAtoms) {
    throw TooLarge("glued tables are limited to " +
                   std::to_string(kMaxEnumerableAtoms) + " atoms");
  }
  const Mask size = Mask{1} << space.size();
  const Mask block2 = second_block.mask();
  const Mask block1 = (size - 1) & ~block2;
  if (block2 == 0 || block1 == 0) throw EmptyBlock();

  // Entries are ratios of subset masses, and small weights give few distinct
  // masses, so each ratio is computed once per (measure, mass, mass).
  struct Masses {
    std::vector<std::uint32_t> id;  // mask -> index into distinct
    std::vector<Rational> distinct;
  };
  const auto masses = [&](const WeightState& mu) {
    std::vector<Rational> mass(size);
    mass[0] = 0;
    for (Mask s = 1; s < size; ++s) {
      mass[s] = mass[s & (s - 1)] +
                mu.weight(static_cast<std::size_t>(std::countr_zero(s)));
    }
    Masses out;
    std::map<Rational, std::uint32_t> seen;
    out.id.reserve(size);
    for (const auto& m : mass) {
      const auto [it, inserted] =
          seen.try_emplace(m, static_cast<std::uint32_t>(out.distinct.size()));
      if (inserted) out.distinct.push_back(m);
      out.id.push_back(it->second);
    }
    return out;
  };
  const std::array<Masses, 2> measures{masses(mu1), masses(mu2)};
  std::vector<Rational> values;
  std::unordered_map<std::uint64_t, std::uint32_t> ratio_index;
  const auto index = [&](Mask part, Mask given) {
    const std::size_t k =
        std::popcount(given & block2) > std::popcount(given & block1) ? 1 : 0;
    const auto& m = measures[k];
    const std::uint64_t key = (std::uint64_t{k} << 62) |
                              (std::uint64_t{m.id[part]} << 31) | m.id[given];
    const auto [it, inserted] =
        ratio_index.try_emplace(key, static_cast<std::uint32_t>(values.size()));
    if (inserted) values.push_back(m.distinct[m.id[part]] / m.distinct[m.id[given]]);
    return it->second;
  };
  return PLTable::from_local_indexed(space, index, values);
}

namespace {

void validate(const SearchConfig& config) {
  if (config.atom_count < 2 || config.atom_count > kMaxEnumerableAtoms) {
    throw InvalidArgument("atom count must lie in [2, " +
                          std::to_string(kMaxEnumerableAtoms) + "]");
  }
  if (config.denominator_bound == 0) {
    throw InvalidArgument("denominator bound must be positive");
  }
}

// Uniform enough for search purposes and identical on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Gluing propose_gluing(const SearchConfig& config, std::size_t trial_index) {
  validate(config);
  const auto n = config.atom_count;
  const auto space = AtomSpace::numbered(n);
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(trial_index),
                    static_cast<std::uint32_t>(std::uint64_t{trial_index} >> 32)};
  std::mt19937_64 rng(seq);

  // Small integer weights make coincidences between plausibilities common,
  // which is what lets both groupings of a triple be realized.
  WeightState::Values w1(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    w1(static_cast<Eigen::Index>(i)) = Rational(1 + draw(rng, 3));
  }
  WeightState::Values w2 = w1;
  if (!config.identical_distributions) {
    if (draw(rng, 2) == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        w2(static_cast<Eigen::Index>(i)) = Rational(1 + draw(rng, 3));
      }
    } else {
      const auto changes = 1 + draw(rng, 2);
      for (std::uint64_t k = 0; k < changes; ++k) {
        const auto atom = static_cast<Eigen::Index>(draw(rng, n));
        const auto q = 1 + draw(rng, config.denominator_bound);
        const auto p = 1 + draw(rng, q);
        w2(atom) += Rational(static_cast<long>(p), static_cast<long>(q));
      }
    }
  }
  const auto block_size = 1 + draw(rng, std::min<std::uint64_t>(3, n - 1));
  std::vector<std::size_t> atoms(n);
  std::iota(atoms.begin(), atoms.end(), std::size_t{0});
  Mask block = 0;
  for (std::uint64_t k = 0; k < block_size; ++k) {
    const auto pick = draw(rng, atoms.size());
    block |= Mask{1} << atoms[pick];
    atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Gluing{WeightState(space, std::move(w1)), WeightState(space, std::move(w2)),
                Proposition::from_mask(space, block)};
}

std::optional<CounterexampleWitness> evaluate_gluing(const Gluing& gluing,
                                                     SearchTally* tally) {
  if (tally) ++tally->trials;
  const auto table = glue_two_distributions(gluing.mu1, gluing.mu2, gluing.second_block);
  auto extraction = extract_universal_function(table);
  if (std::holds_alternative<FunctionConflict>(extraction)) {
    if (tally) ++tally->dependence_violations;
    return std::nullopt;
  }
  auto& f = std::get<UniversalFunction>(extraction);
  const Indexed ix(f);
  auto assoc = associativity(ix);
  if (assoc.passed()) {
    if (tally) ++tally->associative;
    return std::nullopt;
  }
  auto homog = homogeneity(ix);
  return CounterexampleWitness{gluing, std::move(f), std::move(assoc),
                               std::move(homog), 0, 0};
}

SearchResult search_counterexample(const SearchConfig& config) {
  validate(config);
  const auto threads = std::max<std::size_t>(1, thread_count());
  SearchTally tally;
  for (std::size_t start = 0; start < config.max_trials; start += threads) {
    const auto batch = std::min(threads, config.max_trials - start);
    std::vector<SearchTally> tallies(batch);
    std::vector<std::optional<CounterexampleWitness>> found(batch);
    parallel_for(batch, threads, [&](std::size_t k) {
      found[k] = evaluate_gluing(propose_gluing(config, start + k), &tallies[k]);
    });
    for (std::size_t k = 0; k < batch; ++k) {
      tally.trials += tallies[k].trials;
      tally.dependence_violations += tallies[k].dependence_violations;
      tally.associative += tallies[k].associative;
      if (found[k]) {
        found[k]->seed = config.seed;
        found[k]->trial_index = start + k;
        return std::move(*found[k]);
      }
    }
  }
  return Exhausted{tally};
}

}  // namespace plausival
