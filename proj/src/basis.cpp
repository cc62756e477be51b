#include "eulerlab/basis.hpp"

#include "eulerlab/errors.hpp"

namespace eulerlab {

MPoly binom_poly(int j, int shift, const VarList& vars) {
  if (j < 0) throw usage_error("binom_poly: negative j");
  const MPoly r = MPoly::variable(vars, "r");
  MPoly out = MPoly::constant(vars, Rational(1));
  for (int i = 0; i < j; ++i) out *= r + MPoly::constant(vars, Rational(shift - i));
  out *= Rational(1) / factorial(j);
  return out;
}

MPoly t_analog(int m, const VarList& vars) {
  if (m < 0) throw usage_error("t_analog: negative argument");
  MPoly out(vars);
  const std::size_t ti = out.var_index("t");
  for (int k = 0; k < m; ++k) {
    Exponent e(vars.size(), 0);
    e[ti] = static_cast<std::uint32_t>(k);
    out.add_term(e, Rational(1));
  }
  return out;
}

MPoly to_mpoly(const UPoly& f, const VarList& vars, std::string_view var) {
  return MPoly::from_univariate(vars, var, f.coeffs());
}

UPoly to_upoly(const MPoly& f, std::string_view var) { return UPoly(f.univariate_coeffs(var)); }

}  // namespace eulerlab
