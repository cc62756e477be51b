#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eulerlab/mpoly.hpp"
#include "eulerlab/useries.hpp"

namespace eulerlab::gf {

/// A_n(s,t) with A_0 = 1, over {s, t}.
MPoly eulerian_or_one(int n);

/// u-series of (1-t)(1-ut)^r / ((1-u)((1-u)^r - t(1-ut)^r)), the r-th summand
/// of sum_n A_n(s,t) u^n / (1-s)^(n+1) = sum_r s^r (...).
USeries foata_term(int r, std::size_t order);

/// u-series of ((1-ut)^(r+1) - (1-u)^(r+1)) / ((1-u)(1-ut)((1-u)^r - t(1-ut)^r)),
/// the r-th summand of sum_n a_n(s,t) u^n / (1-s)^(n+1).
USeries a_series_term(int r, std::size_t order);

/// u-series of ((1-u)^(r-1) - t^2 (1-ut)^(r-1)) / ((1-u)^r - t(1-ut)^r), whose
/// coefficients f_n are det(M_{n,r}) evaluated at this r.
USeries det_series(int r, std::size_t order);

/// [s^r] of poly(s,t) / (1-s)^(n+1), i.e. sum_j [s^j]poly * C(n+r-j, n); over {t}.
MPoly s_coefficient(const MPoly& poly_st, int n, int r);

/// [s^r u^n] of sum_n A_n(s,t) u^n/(1-s)^(n+1), a polynomial in t. n <= 9.
MPoly lhs_coeff(int n, int r);

/// [s^r t^k u^n] of the same series.
Rational f_nkr(int n, int k, int r);

enum class Eq1Reading {
  exchanged,  ///< [x^(rk)] (1-x^r)(1-x^(r+1))^n / ((1-x)^(n+1) x^r)
  literal,    ///< [x^(kr)] (1-x^k)(1-x^(k+1))^n / ((1-x)^(n+1) x^k)
};

/// [x^(a*b)] (1-x^a)(1-x^(a+1))^n / ((1-x)^(n+1) x^a) with no special cases.
Rational li_closed_raw(int n, int a, int b);

/// Closed form for f(n,k,r). The exchanged reading is the one that agrees
/// with the series for k >= 1; its k = 0 row is the single-permutation slice
/// (only the identity has no excedance), so it returns C(n+r, n) there.
Rational f_nkr_closed(int n, int k, int r, Eq1Reading reading = Eq1Reading::exchanged);

/// Exact value of (1-s)^(n+1) sum_{r>=0} p(r) s^r for p over {t, r} with
/// deg_r p <= n; result over {s, t}. Goes through the binomial basis C(r,k)
/// using Stirling numbers of the second kind.
MPoly binom_resum(const MPoly& poly_in_r, int n);

/// S(m, k) for 0 <= k <= m <= max_m.
std::vector<std::vector<Rational>> stirling2_table(int max_m);

struct FoataReport {
  int max_n = 0;
  int max_r = 0;
  bool pass = true;
  std::size_t cells_checked = 0;
  /// One line per failed cell, naming (check, n, r) and both sides.
  std::vector<std::string> failures;
};

/// Checks, for n <= N and r <= R:
///  - [u^n] foata_term(r) is a polynomial in t equal to lhs_coeff(n, r);
///  - [u^n] a_series_term(r) is a polynomial equal to [s^r] a_n/(1-s)^(n+1);
///  - foata_term(r) - (1-ut) a_series_term(r) == 1 as a series, and for
///    n >= 1 its u^n coefficient matches [s^r] (b_n - (s-1)a_(n-1))/(1-s)^(n+1),
///    which must vanish;
///  - the partial-fraction split of a_series_term(r) through det_series(r).
/// N, R <= 8.
FoataReport verify_foata(int max_n, int max_r);

}  // namespace eulerlab::gf
