#pragma once

#include <string>
#include <string_view>

#include "mckay/group.hpp"
#include "mckay/numeric.hpp"

namespace mckay {

/// Parses "1/r(a1,...,an)" or "r1xr2x...xrk:a11,...,a1n;...;ak1,...,akn".
/// Whitespace is ignored. Throws ParseError naming the offending token and
/// its offset; group validation errors (BadShape, NonGenerating) pass
/// through from build_group.
AbelianGroupData parse_group_spec(std::string_view spec);

/// Comma-separated integers or "p/q" rationals.
RatVector parse_rational_csv(std::string_view csv);

}  // namespace mckay
