#pragma once

// Exports the product rule of a weight-state model as explicit retraction
// tables: P1 = PV(.|A&C) on unknowns, P2 = PV(.|C) on {I_A, PL(A|C)},
// P3 = PV(.|C) on the products, m = pointwise multiplication, e = I_A.

#include "plausival/plausible_value.hpp"
#include "plausival/retraction.hpp"
#include "plausival/unknowns.hpp"

#include <vector>

namespace plausival {

struct RetractionInstance {
  Retraction p1;
  Retraction p2;
  Retraction p3;
  BinaryMap m;
  ElementId e;
};

/// Element ids are to_string of the unknowns. Throws ZeroCondition when
/// A&C = 0.
RetractionInstance product_rule_instance(const PVModel& m,
                                         const std::vector<Unknown>& xs,
                                         const Proposition& a,
                                         const Proposition& c);

}  // namespace plausival
