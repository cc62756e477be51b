#pragma once

#include <string_view>

#include "eulerlab/mpoly.hpp"
#include "eulerlab/ratfunc.hpp"

namespace eulerlab {

/// C(r + shift, j) as a degree-j polynomial in r over `vars` (must contain
/// "r"). This is the generalized binomial (r+shift)(r+shift-1).../j!, so for
/// shift = -1 it vanishes at r = 1..j and equals (-1)^j at r = 0.
MPoly binom_poly(int j, int shift, const VarList& vars = vars::kR);

/// [m]_t = 1 + t + ... + t^(m-1); [0]_t = 0.
MPoly t_analog(int m, const VarList& vars = vars::kT);

MPoly to_mpoly(const UPoly& f, const VarList& vars, std::string_view var);
/// Requires f to involve only `var`.
UPoly to_upoly(const MPoly& f, std::string_view var);

}  // namespace eulerlab
