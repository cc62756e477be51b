#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerlab/rational.hpp"

namespace eulerlab {

using VarList = std::vector<std::string>;
using Exponent = std::vector<std::uint32_t>;

namespace vars {

/// Global variable order. Every VarList used by the library is a
/// subsequence of this one.
inline const VarList kGlobalOrder = {"s", "t", "u", "p", "q", "x", "r"};

inline const VarList kS = {"s"};
inline const VarList kT = {"t"};
inline const VarList kX = {"x"};
inline const VarList kR = {"r"};
inline const VarList kST = {"s", "t"};
inline const VarList kTR = {"t", "r"};
inline const VarList kPQ = {"p", "q"};
inline const VarList kTPQ = {"t", "p", "q"};

/// Sorts names into global order; unknown names go last in input order.
VarList ordered(std::initializer_list<std::string_view> names);

}  // namespace vars

/// Sparse multivariate polynomial over Rational.
///
/// Terms are keyed by exponent vectors of length |vars| and never store a
/// zero coefficient. Binary operations require identical variable lists;
/// use with_vars() to move a polynomial into a larger ring first.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  MPoly() = default;
  explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

  static MPoly constant(const VarList& vars, const Rational& c);
  static MPoly variable(const VarList& vars, std::string_view name);
  static MPoly monomial(const VarList& vars, Exponent e, const Rational& c);

  [[nodiscard]] const VarList& vars() const { return vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_constant() const;

  /// Index of a variable in vars(); throws usage_error when absent.
  [[nodiscard]] std::size_t var_index(std::string_view name) const;
  [[nodiscard]] bool has_var(std::string_view name) const;

  [[nodiscard]] Rational coeff(const Exponent& e) const;
  /// Adds c to the coefficient of x^e, pruning a resulting zero.
  void add_term(const Exponent& e, const Rational& c);

  /// Degree in one variable; -1 for the zero polynomial.
  [[nodiscard]] int degree_in(std::string_view name) const;
  [[nodiscard]] int total_degree() const;

  /// Coefficient of name^k, as a polynomial over the same variable list.
  [[nodiscard]] MPoly coeff_in(std::string_view name, std::uint32_t k) const;

  /// Substitutes a rational value for one variable (exponent becomes 0).
  [[nodiscard]] MPoly specialize(std::string_view name, const Rational& value) const;
  /// Substitutes a polynomial over the same variable list for one variable.
  [[nodiscard]] MPoly substitute(std::string_view name, const MPoly& value) const;
  /// Full evaluation; values are given in vars() order.
  [[nodiscard]] Rational evaluate(std::span<const Rational> values) const;

  /// Re-embeds into another variable list, matching by name. Variables that
  /// are missing from the target must not occur in the polynomial.
  [[nodiscard]] MPoly with_vars(const VarList& target) const;
  [[nodiscard]] MPoly rename(std::string_view from, std::string_view to) const;

  /// Dense coefficient list in one variable, for a polynomial that involves
  /// no other variable. Length is degree + 1 (empty for zero).
  [[nodiscard]] std::vector<Rational> univariate_coeffs(std::string_view name) const;
  static MPoly from_univariate(const VarList& vars, std::string_view name,
                               std::span<const Rational> coeffs);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator-(const MPoly& a);

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const MPoly& o, const char* what) const;

  VarList vars_;
  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

/// Returns q with q * g == f; throws divisibility_error otherwise.
/// Lex-order leading-term division, which is exact whenever g divides f.
MPoly exact_divide(const MPoly& f, const MPoly& g);

/// var^d * f(var -> 1/var). Requires deg_var f <= d.
MPoly reciprocal_in(const MPoly& f, std::string_view var, int d);

/// Plain-text rendering, e.g. "1 + 6*s*t + 5*s^2*t". Terms ordered by total
/// degree, then by exponent vector.
std::string to_text(const MPoly& f);
/// LaTeX rendering with the same term order, e.g. "1+6st+5s^{2}t".
std::string to_latex(const MPoly& f);

std::ostream& operator<<(std::ostream& os, const MPoly& f);

}  // namespace eulerlab
