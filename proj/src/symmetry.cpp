#include "eulerlab/symmetry.hpp"

#include <algorithm>

#include "eulerlab/distributions.hpp"
#include "eulerlab/errors.hpp"

namespace eulerlab {

SymDecomp sym_decompose(const MPoly& f, std::string_view var, int d) {
  if (d < 0) throw usage_error("sym_decompose: negative ambient degree");
  const MPoly x = MPoly::variable(f.vars(), var);
  const MPoly one_minus_x = MPoly::constant(f.vars(), Rational(1)) - x;
  const MPoly rev = reciprocal_in(f, var, d);
  SymDecomp out;
  out.var = std::string(var);
  out.ambient_degree = d;
  try {
    out.a = exact_divide(f - x * rev, one_minus_x);
    out.b = exact_divide(rev - f, one_minus_x);
  } catch (const divisibility_error& err) {
    throw identity_violation(std::string("sym_decompose: ") + err.what());
  }
  return out;
}

bool is_palindromic(const MPoly& f, std::string_view var, int d) {
  if (f.is_zero()) return true;
  if (d < f.degree_in(var)) return false;
  return reciprocal_in(f, var, d) == f;
}

GammaExpansion gamma_expand(const MPoly& f, std::string_view var, int d) {
  GammaExpansion out;
  out.ambient_degree = d;
  if (d < 0) {
    if (!f.is_zero()) throw shape_error("gamma_expand: nonzero polynomial with negative degree");
    return out;
  }
  if (!is_palindromic(f, var, d)) {
    throw shape_error("gamma_expand: polynomial is not palindromic of degree " + std::to_string(d));
  }
  const MPoly x = MPoly::variable(f.vars(), var);
  const MPoly one_plus_x = MPoly::constant(f.vars(), Rational(1)) + x;
  MPoly rest = f;
  for (int i = 0; i <= d / 2; ++i) {
    MPoly g = rest.coeff_in(var, static_cast<std::uint32_t>(i));
    rest -= g * pow(x, static_cast<unsigned>(i)) * pow(one_plus_x, static_cast<unsigned>(d - 2 * i));
    out.gammas.push_back(std::move(g));
  }
  if (!rest.is_zero()) throw identity_violation("gamma_expand: nonzero remainder " + to_text(rest));
  return out;
}

MPoly reconstruct(const GammaExpansion& g, const VarList& vars, std::string_view var) {
  const MPoly x = MPoly::variable(vars, var);
  const MPoly one_plus_x = MPoly::constant(vars, Rational(1)) + x;
  MPoly out(vars);
  for (std::size_t i = 0; i < g.gammas.size(); ++i) {
    out += g.gammas[i] * pow(x, static_cast<unsigned>(i)) *
           pow(one_plus_x, static_cast<unsigned>(g.ambient_degree - 2 * static_cast<int>(i)));
  }
  return out;
}

bool coefficientwise_nonnegative(const GammaExpansion& g) {
  for (const auto& gamma : g.gammas) {
    for (const auto& [e, c] : gamma.terms()) {
      if (c.sign() < 0) return false;
    }
  }
  return true;
}

namespace {

// Binomial rows of (1+x)^k, k <= d.
std::vector<Rational> one_plus_x_power(int k) {
  std::vector<Rational> row(static_cast<std::size_t>(k + 1));
  for (int j = 0; j <= k; ++j) row[static_cast<std::size_t>(j)] = binomial(k, j);
  return row;
}

}  // namespace

RationalGamma gamma_expand(std::span<const Rational> coeffs, int d) {
  RationalGamma out;
  out.ambient_degree = d;
  std::vector<Rational> rest(coeffs.begin(), coeffs.end());
  while (!rest.empty() && rest.back().is_zero()) rest.pop_back();
  if (d < 0) {
    if (!rest.empty()) throw shape_error("gamma_expand: nonzero polynomial with negative degree");
    return out;
  }
  if (static_cast<int>(rest.size()) > d + 1) {
    throw shape_error("gamma_expand: degree exceeds ambient degree " + std::to_string(d));
  }
  rest.resize(static_cast<std::size_t>(d + 1), Rational(0));
  for (int k = 0; k <= d; ++k) {
    if (rest[static_cast<std::size_t>(k)] != rest[static_cast<std::size_t>(d - k)]) {
      throw shape_error("gamma_expand: coefficient list is not palindromic of degree " + std::to_string(d));
    }
  }
  for (int i = 0; i <= d / 2; ++i) {
    const Rational g = rest[static_cast<std::size_t>(i)];
    out.gammas.push_back(g);
    if (g.is_zero()) continue;
    const auto row = one_plus_x_power(d - 2 * i);
    for (std::size_t j = 0; j < row.size(); ++j) rest[static_cast<std::size_t>(i) + j] -= g * row[j];
  }
  if (std::any_of(rest.begin(), rest.end(), [](const Rational& c) { return !c.is_zero(); })) {
    throw identity_violation("gamma_expand: nonzero remainder");
  }
  return out;
}

std::vector<Rational> reconstruct(const RationalGamma& g) {
  if (g.ambient_degree < 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(g.ambient_degree + 1), Rational(0));
  for (std::size_t i = 0; i < g.gammas.size(); ++i) {
    const auto row = one_plus_x_power(g.ambient_degree - 2 * static_cast<int>(i));
    for (std::size_t j = 0; j < row.size(); ++j) out[i + j] += g.gammas[i] * row[j];
  }
  return out;
}

bool all_nonnegative(const RationalGamma& g) {
  return std::all_of(g.gammas.begin(), g.gammas.end(), [](const Rational& c) { return c.sign() >= 0; });
}

bool is_unimodal(std::span<const Rational> coeffs) {
  std::size_t k = 1;
  while (k < coeffs.size() && coeffs[k - 1] <= coeffs[k]) ++k;
  while (k < coeffs.size() && coeffs[k - 1] >= coeffs[k]) ++k;
  return k >= coeffs.size();
}

bool is_alternatingly_increasing(std::span<const Rational> coeffs) {
  if (coeffs.empty()) return true;
  std::vector<std::size_t> chain;
  for (std::size_t lo = 0, hi = coeffs.size() - 1; lo <= hi; ++lo, --hi) {
    chain.push_back(lo);
    if (hi != lo) chain.push_back(hi);
    if (hi == 0) break;
  }
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (coeffs[chain[k - 1]] > coeffs[chain[k]]) return false;
  }
  return true;
}

std::vector<int> mode_indices(std::span<const Rational> coeffs) {
  std::vector<int> out;
  if (coeffs.empty()) return out;
  const Rational top = *std::max_element(coeffs.begin(), coeffs.end());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == top) out.push_back(static_cast<int>(k));
  }
  return out;
}

ShapeFlags shape_checks(std::span<const Rational> coeffs) {
  if (coeffs.empty()) throw usage_error("shape_checks: empty coefficient list");
  ShapeFlags flags;
  const int d = static_cast<int>(coeffs.size()) - 1;
  flags.palindromic = std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
  flags.unimodal = is_unimodal(coeffs);
  flags.alternatingly_increasing = is_alternatingly_increasing(coeffs);
  flags.gamma_nonnegative = flags.palindromic && all_nonnegative(gamma_expand(coeffs, d));
  return flags;
}

SymDecomp decompose_eulerian(int n) { return sym_decompose(eulerian_st(n), "t", n - 1); }

MPoly eulerian_a(int n) {
  if (n == 0) return MPoly(vars::kST);
  return decompose_eulerian(n).a;
}

BIdentityReport verify_b_identity(int n) {
  if (n < 1 || n > 9) throw usage_error("verify_b_identity: n must lie in [1, 9]");
  BIdentityReport report;
  report.n = n;
  const MPoly a_n_full = eulerian_st(n);
  const SymDecomp dec = sym_decompose(a_n_full, "t", n - 1);
  report.a_n = dec.a;
  report.b_n = dec.b;
  report.a_prev = eulerian_a(n - 1);
  const MPoly s = MPoly::variable(vars::kST, "s");
  const MPoly t = MPoly::variable(vars::kST, "t");
  const MPoly s_minus_1 = s - MPoly::constant(vars::kST, Rational(1));
  report.b_defect = report.b_n - s_minus_1 * report.a_prev;
  report.identity_defect = a_n_full - report.a_n - s_minus_1 * t * report.a_prev;
  report.a_palindromic = is_palindromic(report.a_n, "t", n - 1);
  report.pass = report.b_defect.is_zero() && report.identity_defect.is_zero() && report.a_palindromic;
  return report;
}

ScanReport conjecture_scan(int n, const Rational& p, const Rational& q, bool force) {
  if (n < 1 || n > 9) throw usage_error("conjecture_scan: n must lie in [1, 9]");
  return conjecture_scan(trivariate(n), n, p, q, force);
}

ScanReport conjecture_scan(const MPoly& trivariate_n, int n, const Rational& p, const Rational& q,
                           bool force) {
  if (n < 1 || n > 9) throw usage_error("conjecture_scan: n must lie in [1, 9]");
  ScanReport report;
  report.n = n;
  report.p = p;
  report.q = q;
  report.in_hypothesis = p > Rational(1) && q >= Rational(1);
  if (!report.in_hypothesis && !force) {
    throw usage_error("conjecture_scan: needs p > 1 and q >= 1 (use force to scan anyway)");
  }
  const MPoly f = trivariate_n.specialize("p", p).specialize("q", q).with_vars(vars::kT);
  const int d = n - 1;
  const SymDecomp dec = sym_decompose(f, "t", d);
  auto padded = [](const MPoly& g, int len) {
    std::vector<Rational> c = g.univariate_coeffs("t");
    c.resize(static_cast<std::size_t>(std::max(len, 0)), Rational(0));
    return c;
  };
  report.coeffs = padded(f, d + 1);
  report.a_coeffs = padded(dec.a, d + 1);
  report.b_coeffs = padded(dec.b, d);
  report.gamma_a = gamma_expand(report.a_coeffs, d);
  report.gamma_b = gamma_expand(report.b_coeffs, d - 1);
  report.gamma_positive = all_nonnegative(report.gamma_a) && all_nonnegative(report.gamma_b);
  report.alternatingly_increasing = is_alternatingly_increasing(report.coeffs);
  report.unimodal = is_unimodal(report.coeffs);
  report.modes = mode_indices(report.coeffs);
  return report;
}

}  // namespace eulerlab
