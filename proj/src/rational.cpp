#include "plausival/rational.hpp"

#include "plausival/error.hpp"

#include <cctype>
#include <string>

namespace plausival {

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t start = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
    start = 1;
  }
  if (start == text.size()) {
    throw ParseError("empty integer in rational '" + std::string(text) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("bad digit in rational '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true));
  }
  const Integer p = parse_integer(text.substr(0, slash), true);
  const Integer q = parse_integer(text.substr(slash + 1), false);
  if (q == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(p, q);
}

}  // namespace plausival
