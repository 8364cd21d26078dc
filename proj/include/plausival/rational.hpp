#pragma once

// Exact scalars for every model value. GMP-backed rationals without
// expression templates so they drop into Eigen dense types as a scalar.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace plausival {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Canonical "p/q" form, q > 0 and gcd(|p|, q) = 1. Integers keep the "/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or "p" (optional sign on p). Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace plausival
