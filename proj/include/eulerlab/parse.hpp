#pragma once

#include <string_view>

#include "eulerlab/mpoly.hpp"

namespace eulerlab {

/// Parses a polynomial written the way it is usually typeset, e.g.
/// "1+(6s+5s^2)t+(4s+6s^2+s^3)t^2+st^3" or "3/2 t(t+1) r".
///
/// Variables are single letters from `vars`; juxtaposition and '*' both
/// multiply; "a/b" is only accepted between integer literals. Throws
/// usage_error with the offending position.
MPoly parse_poly(std::string_view text, const VarList& vars);

}  // namespace eulerlab
