#pragma once

#include "nodelift/poly/multipoly.hpp"

#include <string_view>

namespace nodelift {

/// Parses
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := nat | var | '(' expr ')'
/// A leading '-' is read as "0 - term". Errors: SyntaxError (with position),
/// UnknownVariable.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars,
                     const Ring& ring = Ring::rationals());

} // namespace nodelift
