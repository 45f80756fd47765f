#pragma once

#include "tsw/groupring/fraction.hpp"

namespace tsw {

// Coefficient of `target` in the expansion of x along `direction` (b1 = 1):
// (g - 1)^{-1} = -1 - g - g^2 - ... for direction-positive g and
// g^{-1} + g^{-2} + ... for direction-negative g.
Rational series_coefficient(const QHFraction& x, const GroupElement& direction, const GroupElement& target);

}  // namespace tsw
