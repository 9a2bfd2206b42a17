#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvelab/mpoly.hpp"

namespace curvelab {

/// Parses an expression built from + - * / ^, parentheses, integer and
/// rational literals and the declared variables. Division is only allowed
/// by nonzero constants. U+2212 is accepted as a minus sign.
///
/// Throws SyntaxError (with the byte offset) or UnknownVariable.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Parses "a:b:c" (or "a:b:c:d") into rational coordinates.
std::vector<Rational> parse_point(std::string_view text);

}  // namespace curvelab
