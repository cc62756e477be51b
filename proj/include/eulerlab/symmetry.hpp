#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerlab/mpoly.hpp"

namespace eulerlab {

/// f = a + var*b with a palindromic of ambient degree d and b palindromic of
/// ambient degree d-1.
struct SymDecomp {
  MPoly a;
  MPoly b;
  std::string var;
  int ambient_degree = 0;
};

/// a = (f - var^(d+1) f(1/var)) / (1 - var),
/// b = (var^d f(1/var) - f) / (1 - var). Requires deg_var f <= d.
/// The ambient degree is never inferred from f.
SymDecomp sym_decompose(const MPoly& f, std::string_view var, int d);

/// True iff var^d f(1/var) == f. The zero polynomial is palindromic for any
/// d, including d = -1.
bool is_palindromic(const MPoly& f, std::string_view var, int d);

/// Expansion of a palindromic polynomial in the basis var^i (1+var)^(d-2i).
/// Coefficients live in the remaining variables (same variable list, with
/// `var` absent from every gamma).
struct GammaExpansion {
  int ambient_degree = 0;
  std::vector<MPoly> gammas;
};

GammaExpansion gamma_expand(const MPoly& f, std::string_view var, int d);
MPoly reconstruct(const GammaExpansion& g, const VarList& vars, std::string_view var);
/// Every gamma has only nonnegative coefficients (symbolic gamma-positivity).
bool coefficientwise_nonnegative(const GammaExpansion& g);

/// Specialized (pure number) version. d < 0 means the zero polynomial of
/// ambient degree -1, whose expansion is empty.
struct RationalGamma {
  int ambient_degree = 0;
  std::vector<Rational> gammas;
};

/// `coeffs` is padded with zeros to length d+1; throws shape_error if the
/// padded list is not palindromic or is longer than d+1.
RationalGamma gamma_expand(std::span<const Rational> coeffs, int d);
std::vector<Rational> reconstruct(const RationalGamma& g);
bool all_nonnegative(const RationalGamma& g);

struct ShapeFlags {
  bool palindromic = false;
  bool unimodal = false;
  bool alternatingly_increasing = false;
  bool gamma_nonnegative = false;
};

bool is_unimodal(std::span<const Rational> coeffs);
/// f_0 <= f_n <= f_1 <= f_(n-1) <= ... over the whole list.
bool is_alternatingly_increasing(std::span<const Rational> coeffs);
/// Positions of the maximum coefficient.
std::vector<int> mode_indices(std::span<const Rational> coeffs);
/// Flags for a coefficient list read with ambient degree size()-1.
ShapeFlags shape_checks(std::span<const Rational> coeffs);

/// Symmetric decomposition of A_n(s,t) with ambient degree n-1.
SymDecomp decompose_eulerian(int n);
/// a_n(s,t) with the convention a_0 = 0.
MPoly eulerian_a(int n);

struct BIdentityReport {
  int n = 0;
  bool pass = false;
  MPoly a_n;
  MPoly a_prev;
  MPoly b_n;
  /// b_n - (s-1) a_(n-1)
  MPoly b_defect;
  /// A_n - a_n - (s-1) t a_(n-1)
  MPoly identity_defect;
  bool a_palindromic = false;
};

/// Checks b_n = (s-1) a_(n-1) and A_n = a_n + (s-1) t a_(n-1) against the
/// enumerated A_n. 1 <= n <= 9 (n = 1 uses a_0 = 0).
BIdentityReport verify_b_identity(int n);

struct ScanReport {
  int n = 0;
  Rational p;
  Rational q;
  bool in_hypothesis = false;  // p > 1 and q >= 1
  std::vector<Rational> coeffs;  // specialized polynomial in t, length n
  std::vector<Rational> a_coeffs;
  std::vector<Rational> b_coeffs;
  RationalGamma gamma_a;
  RationalGamma gamma_b;
  bool gamma_positive = false;  // both parts
  bool alternatingly_increasing = false;
  bool unimodal = false;
  std::vector<int> modes;
};

/// Specializes the trivariate polynomial at (p, q), decomposes with ambient
/// degree n-1 and gamma-expands both parts. Outside p > 1, q >= 1 this is a
/// usage error unless `force` is set. 1 <= n <= 9.
ScanReport conjecture_scan(int n, const Rational& p, const Rational& q, bool force = false);
/// Same, reusing an already built trivariate(n).
ScanReport conjecture_scan(const MPoly& trivariate_n, int n, const Rational& p, const Rational& q,
                           bool force = false);

}  // namespace eulerlab
