#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

/// Parses `+ - * ^`, parentheses, integer and rational literals (`3/4`) and the
/// ring's variable names. Juxtaposition multiplies (`2x`, `x y`). Any other `/`
/// is rejected. Throws ParseError.
Polynomial parse_polynomial(std::string_view src, const RingPtr& ring);

/// Comma-separated list, e.g. "x^2, x*y + y^2". Empty input gives an empty list.
/// Commas inside parentheses do not split.
std::vector<Polynomial> parse_polynomial_list(std::string_view src, const RingPtr& ring);

/// Identifiers in order of first appearance; used when a ring is not declared.
std::vector<std::string> scan_variables(std::string_view src);

}  // namespace socle
