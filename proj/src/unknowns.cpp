#include "plausival/unknowns.hpp"

namespace plausival {

std::string to_string(const Unknown& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(x(i));
  }
  return out + ")";
}

}  // namespace plausival
