#pragma once

// Helpers shared by the test binaries, and oracles that recompute results
// straight from the definitions with plain loops, independent of the
// library's cached or indexed code paths.

#include "plausival/axiom_checker.hpp"
#include "plausival/boolean_algebra.hpp"
#include "plausival/cox_lab.hpp"
#include "plausival/plausible_value.hpp"
#include "plausival/rational.hpp"
#include "plausival/unknowns.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace plausival::test {

inline Rational q(long p, long d = 1) { return Rational(p, d); }

inline Unknown unknown(const AtomSpace& space, std::initializer_list<Rational> values) {
  Unknown::Values v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return Unknown(space, std::move(v));
}

inline PVModel model(const std::vector<Rational>& weights) {
  const auto space = AtomSpace::numbered(weights.size());
  WeightState::Values w(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) w(static_cast<Eigen::Index>(i)) = weights[i];
  return PVModel(WeightState(space, std::move(w)));
}

// Every weight vector in {1..5}^n.
inline std::vector<std::vector<Rational>> weight_grid(std::size_t n) {
  std::vector<std::vector<Rational>> out;
  std::vector<int> digits(n, 1);
  while (true) {
    std::vector<Rational> w;
    for (const auto d : digits) w.emplace_back(d);
    out.push_back(std::move(w));
    std::size_t i = 0;
    while (i < n && digits[i] == 5) digits[i++] = 1;
    if (i == n) break;
    ++digits[i];
  }
  return out;
}

namespace oracle {

inline std::vector<Rational> weights_of(const PVModel& m) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < m.space().size(); ++i) w.push_back(m.state().weight(i));
  return w;
}

inline std::vector<Rational> values_of(const Unknown& x) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(x(i));
  return v;
}

// Weighted average of x over the atoms of c.
inline Rational pv(const std::vector<Rational>& w, const std::vector<Rational>& x,
                   Mask c) {
  Rational num = 0;
  Rational den = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if ((c >> i) & 1U) {
      num += w[i] * x[i];
      den += w[i];
    }
  }
  return num / den;
}

// The three deliberately broken functionals, written out from their
// descriptions.
inline Rational mutated_pv(Mutation mutation, const std::vector<Rational>& w,
                           const std::vector<Rational>& x, Mask c) {
  switch (mutation) {
    case Mutation::none:
      return pv(w, x, c);
    case Mutation::square_pv: {
      const auto v = pv(w, x, c);
      return v * v;
    }
    case Mutation::drop_weight: {
      Rational num = 0;
      Rational den = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if ((c >> i) & 1U) {
          if (i != 0) num += w[i] * x[i];
          den += w[i];
        }
      }
      return num / den;
    }
    case Mutation::clamp_pl: {
      const auto v = pv(w, x, c);
      return v < Rational(9, 10) ? v : Rational(9, 10);
    }
  }
  return 0;
}

inline std::vector<Rational> indicator(Mask a, std::size_t n) {
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = ((a >> i) & 1U) ? 1 : 0;
  return v;
}

using Key = std::pair<Rational, Rational>;
using Points = std::map<Key, Rational>;

// F from the definition: every (A, B, C) with B&C != 0, no locality
// shortcut. nullopt when some (x, y) gets two values.
template <typename PL>
std::optional<Points> universal_function(std::size_t n, PL pl) {
  const Mask size = Mask{1} << n;
  Points points;
  for (Mask a = 0; a < size; ++a) {
    for (Mask b = 0; b < size; ++b) {
      for (Mask c = 1; c < size; ++c) {
        if ((b & c) == 0) continue;
        Key key{pl(a, b & c), pl(b, c)};
        const auto z = pl(a & b, c);
        const auto [it, inserted] = points.emplace(key, z);
        if (!inserted && it->second != z) return std::nullopt;
      }
    }
  }
  return points;
}

inline Points points_of(const UniversalFunction& f) {
  Points out;
  for (const auto& p : f.points()) out[{f.value(p.x), f.value(p.y)}] = f.value(p.z);
  return out;
}

struct AssociativityResult {
  std::size_t realized = 0;
  std::optional<std::array<Rational, 3>> first_violation;
};

// Every (x, y, z) with both groupings realized, in value order.
inline AssociativityResult associativity(const Points& f) {
  AssociativityResult out;
  std::map<Rational, std::vector<std::pair<Rational, Rational>>> rows;
  for (const auto& [xy, z] : f) rows[xy.first].emplace_back(xy.second, z);
  for (const auto& [xy, u] : f) {
    const auto& [x, y] = xy;
    const auto row = rows.find(y);
    if (row == rows.end()) continue;
    for (const auto& [w, s] : row->second) {
      const auto left = f.find({u, w});
      const auto right = f.find({x, s});
      if (left == f.end() || right == f.end()) continue;
      ++out.realized;
      if (left->second != right->second && !out.first_violation) {
        out.first_violation = std::array<Rational, 3>{x, y, w};
      }
    }
  }
  return out;
}

// F(r x, y) = r F(x, y) for every pair of points sharing y, x != 0.
inline bool homogeneous(const Points& f) {
  for (const auto& [p, z1] : f) {
    for (const auto& [r, z2] : f) {
      if (p.second != r.second) continue;
      if (p.first == 0) {
        // F(0, y) = 0 F(x, y) for any realized x
        if (z1 != 0) return false;
        continue;
      }
      if (z2 * p.first != z1 * r.first) return false;
    }
  }
  return true;
}

// Glued table entry from its description: conditionals given B come from
// mu2 when B has more atoms in the second block than outside it.
inline Rational glued_pl(const std::vector<Rational>& mu1, const std::vector<Rational>& mu2,
                         Mask block2, Mask a, Mask b) {
  std::size_t in = 0;
  std::size_t out = 0;
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    if ((b >> i) & 1U) ((block2 >> i) & 1U) ? ++in : ++out;
  }
  const auto& mu = in > out ? mu2 : mu1;
  Rational num = 0;
  Rational den = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if ((b >> i) & 1U) {
      den += mu[i];
      if ((a >> i) & 1U) num += mu[i];
    }
  }
  return num / den;
}

// Fast integer route for 12-atom gluings: weights are scaled to integers,
// ratios are reduced 64-bit fractions, and points live in a hash map. Only
// chains D <= B <= C are enumerated, which is exact here because a glued
// entry only depends on (A & B, B).
struct Fraction {
  std::int64_t num;
  std::int64_t den;
  bool operator==(const Fraction&) const = default;
};

inline Fraction reduce(std::int64_t num, std::int64_t den) {
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

struct IntegerGluing {
  std::size_t n = 0;
  std::vector<std::int64_t> mass1, mass2;
  Mask block2 = 0;

  IntegerGluing(const std::vector<Rational>& mu1, const std::vector<Rational>& mu2,
                Mask block) : n(mu1.size()), block2(block) {
    Integer lcm = 1;
    for (const auto* mu : {&mu1, &mu2}) {
      for (const auto& w : *mu) {
        const Integer d = boost::multiprecision::denominator(w);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
      }
    }
    const auto scaled = [&](const std::vector<Rational>& mu) {
      std::vector<std::int64_t> mass(std::size_t{1} << n, 0);
      for (Mask s = 1; s < mass.size(); ++s) {
        for (std::size_t i = 0; i < n; ++i) {
          if ((s >> i) & 1U) {
            const Rational v = mu[i] * Rational(lcm);
            mass[s] += boost::multiprecision::numerator(v).convert_to<std::int64_t>();
          }
        }
      }
      return mass;
    };
    mass1 = scaled(mu1);
    mass2 = scaled(mu2);
  }

  Fraction pl(Mask part, Mask given) const {
    const auto in = std::popcount(given & block2);
    const auto out = std::popcount(given & ~block2);
    const auto& mass = in > out ? mass2 : mass1;
    return reduce(mass[part], mass[given]);
  }
};

struct FractionHash {
  std::size_t operator()(const std::pair<Fraction, Fraction>& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto v : {k.first.num, k.first.den, k.second.num, k.second.den}) {
      h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
    }
    return h;
  }
};

using IntegerPoints =
    std::unordered_map<std::pair<Fraction, Fraction>, Fraction, FractionHash>;

// nullopt on a conflict.
inline std::optional<IntegerPoints> integer_points(const IntegerGluing& g) {
  IntegerPoints points;
  const Mask size = Mask{1} << g.n;
  for (Mask c = 1; c < size; ++c) {
    for (Mask b = c; b != 0; b = (b - 1) & c) {
      const auto y = g.pl(b, c);
      for (Mask d = b;; d = (d - 1) & b) {
        const auto z = g.pl(d, c);
        const auto [it, inserted] = points.try_emplace({g.pl(d, b), y}, z);
        if (!inserted && !(it->second == z)) return std::nullopt;
        if (d == 0) break;
      }
    }
  }
  return points;
}

inline Fraction fraction_of(const Rational& r) {
  return {boost::multiprecision::numerator(r).convert_to<std::int64_t>(),
          boost::multiprecision::denominator(r).convert_to<std::int64_t>()};
}

}  // namespace oracle

}  // namespace plausival::test
