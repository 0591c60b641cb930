#pragma once

#include <vector>

#include "cca/monomial.hpp"
#include "cca/rational.hpp"

namespace cca {

// Decides by exact phase-1 simplex (Bland's rule, rational arithmetic)
// whether v lies in conv(points) + R_{>=0}^d, i.e. whether some convex
// combination of the points is componentwise at most v.
bool lp_in_shifted_hull(const std::vector<Exponent>& points,
                        const std::vector<Rational>& v);

}  // namespace cca
