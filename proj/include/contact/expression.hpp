#pragma once

#include <string_view>

#include "contact/polynomial.hpp"

namespace contact
{

// Parses expressions such as "x^2 + y^3", "2x^3 - x*y", "(x+y)^2 z".
// Integer coefficients, + and -, ^ with a nonnegative integer exponent,
// * or juxtaposition for products, parentheses. Variables are x, y, z, w.
// The result has max(used variable index + 1, min_vars, 1) variables.
// Throws std::invalid_argument with the offending position on bad input.
Polynomial parse_polynomial(std::string_view text, int min_vars = 0);

} // namespace contact
