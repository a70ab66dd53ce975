#pragma once

#include <string>
#include <string_view>

#include "zariski/homogeneous_poly.hpp"

namespace zariski {

// Grammar: integers and rationals, x y z, the field generator, + - * / ^ and
// parentheses. Division is only by nonzero constants. Errors carry line and column.
HomogeneousPoly parse_poly(std::string_view text, const FieldPtr& field = nullptr);

// parse_poly that also rejects the zero polynomial and constants.
HomogeneousPoly parse_curve_equation(std::string_view text, const FieldPtr& field = nullptr);

// Univariate polynomial over Q in `symbol`, for minimal polynomials.
QPoly parse_univariate(std::string_view text, const std::string& symbol);

}  // namespace zariski
