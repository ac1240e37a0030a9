#pragma once

#include <string>

#include "mckay/fan.hpp"

namespace mckay {

/// Cross-section of a fan in Q^3 by the plane x1 + x2 + x3 = 1, drawn in a
/// triangle with e1 at the top, e2 bottom right and e3 bottom left. Rays
/// carry their 1-based index; walls are the 2-dimensional cones. Throws
/// BadShape unless fan.dim == 3 and every ray has positive coordinate sum.
std::string fan_cross_section_svg(const Fan& fan);

}  // namespace mckay
