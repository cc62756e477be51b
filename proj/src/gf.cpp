#include "eulerlab/gf.hpp"

#include "eulerlab/basis.hpp"
#include "eulerlab/distributions.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/symmetry.hpp"

namespace eulerlab::gf {

namespace {

const RatFunc kT(UPoly({Rational(0), Rational(1)}));

USeries one_minus_u(std::size_t order) { return USeries::linear(order, Rational(1), Rational(-1)); }
USeries one_minus_ut(std::size_t order) { return USeries::linear(order, Rational(1), -kT); }

// (1-u)^r - t(1-ut)^r
USeries foata_denominator(int r, std::size_t order) {
  return pow(one_minus_u(order), r) - pow(one_minus_ut(order), r) * kT;
}

MPoly upoly_to_t(const UPoly& f) { return to_mpoly(f, vars::kT, "t"); }

}  // namespace

MPoly eulerian_or_one(int n) {
  if (n == 0) return MPoly::constant(vars::kST, Rational(1));
  return eulerian_st(n);
}

USeries foata_term(int r, std::size_t order) {
  if (r < 0) throw usage_error("foata_term: negative r");
  const USeries numer = pow(one_minus_ut(order), r) * (RatFunc(Rational(1)) - kT);
  return numer * (one_minus_u(order) * foata_denominator(r, order)).inverse();
}

USeries a_series_term(int r, std::size_t order) {
  if (r < 0) throw usage_error("a_series_term: negative r");
  const USeries numer = pow(one_minus_ut(order), r + 1) - pow(one_minus_u(order), r + 1);
  const USeries denom = one_minus_u(order) * one_minus_ut(order) * foata_denominator(r, order);
  return numer * denom.inverse();
}

USeries det_series(int r, std::size_t order) {
  if (r < 0) throw usage_error("det_series: negative r");
  const USeries numer =
      pow(one_minus_u(order), r - 1) - pow(one_minus_ut(order), r - 1) * (kT * kT);
  return numer * foata_denominator(r, order).inverse();
}

MPoly s_coefficient(const MPoly& poly_st, int n, int r) {
  MPoly out(vars::kT);
  for (int j = 0; j <= r; ++j) {
    const Rational weight = binomial(n + r - j, n);
    if (weight.is_zero()) continue;
    out += poly_st.coeff_in("s", static_cast<std::uint32_t>(j)).with_vars(vars::kT) * weight;
  }
  return out;
}

MPoly lhs_coeff(int n, int r) {
  if (n < 0 || n > 9) throw usage_error("lhs_coeff: n must lie in [0, 9]");
  if (r < 0) throw usage_error("lhs_coeff: negative r");
  return s_coefficient(eulerian_or_one(n), n, r);
}

Rational f_nkr(int n, int k, int r) {
  if (k < 0) throw usage_error("f_nkr: negative k");
  return lhs_coeff(n, r).coeff({static_cast<std::uint32_t>(k)});
}

Rational li_closed_raw(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0) throw usage_error("li_closed_raw: negative index");
  // [x^(ab + a)] of (1 - x^a)(1 - x^(a+1))^n (1-x)^-(n+1)
  const int target = a * b + a;
  std::vector<Rational> numer(static_cast<std::size_t>(target + 1), Rational(0));
  for (int j = 0; j <= n; ++j) {
    const Rational c = binomial(n, j) * Rational(j % 2 == 0 ? 1 : -1);
    const int e = j * (a + 1);
    if (e <= target) numer[static_cast<std::size_t>(e)] += c;
    if (e + a <= target) numer[static_cast<std::size_t>(e + a)] -= c;
  }
  Rational total(0);
  for (int m = 0; m <= target; ++m) {
    total += numer[static_cast<std::size_t>(m)] * binomial(n + target - m, n);
  }
  return total;
}

Rational f_nkr_closed(int n, int k, int r, Eq1Reading reading) {
  if (n < 0 || n > 9) throw usage_error("f_nkr_closed: n must lie in [0, 9]");
  if (k < 0 || r < 0) throw usage_error("f_nkr_closed: negative index");
  if (reading == Eq1Reading::literal) return li_closed_raw(n, k, r);
  if (k == 0) return binomial(n + r, n);
  return li_closed_raw(n, r, k);
}

std::vector<std::vector<Rational>> stirling2_table(int max_m) {
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(max_m + 1));
  for (int m = 0; m <= max_m; ++m) {
    s[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m + 1), Rational(0));
  }
  s[0][0] = Rational(1);
  for (int m = 1; m <= max_m; ++m) {
    auto& row = s[static_cast<std::size_t>(m)];
    const auto& prev = s[static_cast<std::size_t>(m - 1)];
    for (int k = 1; k <= m; ++k) {
      Rational v = prev[static_cast<std::size_t>(k - 1)];
      if (k <= m - 1) v += Rational(k) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = v;
    }
  }
  return s;
}

MPoly binom_resum(const MPoly& poly_in_r, int n) {
  if (poly_in_r.vars() != vars::kTR) throw usage_error("binom_resum: input must be over {t, r}");
  const int deg = poly_in_r.degree_in("r");
  if (deg > n) {
    throw usage_error("binom_resum: degree in r (" + std::to_string(deg) + ") exceeds n = " + std::to_string(n));
  }
  if (n < 0) throw usage_error("binom_resum: negative n");
  const auto stirling = stirling2_table(std::max(deg, 0));
  // p(r) = sum_m c_m r^m, r^m = sum_k S(m,k) k! C(r,k)
  std::vector<MPoly> binom_coeffs(static_cast<std::size_t>(n + 1), MPoly(vars::kST));
  for (int m = 0; m <= deg; ++m) {
    const MPoly c_m = poly_in_r.coeff_in("r", static_cast<std::uint32_t>(m)).with_vars(vars::kST);
    for (int k = 0; k <= m; ++k) {
      const Rational w = stirling[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] * factorial(k);
      if (!w.is_zero()) binom_coeffs[static_cast<std::size_t>(k)] += c_m * w;
    }
  }
  // sum_r C(r,k) s^r = s^k/(1-s)^(k+1)
  const MPoly s = MPoly::variable(vars::kST, "s");
  const MPoly one_minus_s = MPoly::constant(vars::kST, Rational(1)) - s;
  MPoly out(vars::kST);
  for (int k = 0; k <= n; ++k) {
    const auto& b = binom_coeffs[static_cast<std::size_t>(k)];
    if (b.is_zero()) continue;
    out += b * pow(s, static_cast<unsigned>(k)) * pow(one_minus_s, static_cast<unsigned>(n - k));
  }
  return out;
}

FoataReport verify_foata(int max_n, int max_r) {
  if (max_n < 0 || max_n > 8 || max_r < 0 || max_r > 8) {
    throw usage_error("verify_foata: N and R must lie in [0, 8]");
  }
  FoataReport report;
  report.max_n = max_n;
  report.max_r = max_r;
  const auto order = static_cast<std::size_t>(max_n);

  std::vector<MPoly> a_parts;
  std::vector<MPoly> b_parts;
  for (int n = 0; n <= max_n; ++n) {
    if (n == 0) {
      a_parts.emplace_back(vars::kST);
      b_parts.emplace_back(vars::kST);
    } else {
      const SymDecomp dec = decompose_eulerian(n);
      a_parts.push_back(dec.a);
      b_parts.push_back(dec.b);
    }
  }
  const MPoly s_minus_1 = MPoly::variable(vars::kST, "s") - MPoly::constant(vars::kST, Rational(1));

  auto fail = [&](const std::string& check, int n, int r, const std::string& lhs, const std::string& rhs) {
    report.pass = false;
    report.failures.push_back(check + " n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + lhs +
                              " != " + rhs);
  };
  auto compare = [&](const std::string& check, int n, int r, const RatFunc& series_side, const MPoly& poly_side) {
    ++report.cells_checked;
    if (!series_side.is_polynomial()) {
      fail(check, n, r, to_text(series_side), to_text(poly_side) + " (series coefficient not polynomial)");
      return;
    }
    const MPoly lhs = upoly_to_t(series_side.num());
    if (lhs != poly_side) fail(check, n, r, to_text(lhs), to_text(poly_side));
  };

  for (int r = 0; r <= max_r; ++r) {
    const USeries foata = foata_term(r, order);
    const USeries a_term = a_series_term(r, order);
    const USeries telescoped = foata - one_minus_ut(order) * a_term;
    const USeries one = USeries::one(order);
    ++report.cells_checked;
    if (telescoped != one) fail("telescoping-series", -1, r, to_text(telescoped), "1");

    const RatFunc t_inv = kT.inverse();
    const USeries split = one_minus_u(order).inverse() * (-t_inv) - one_minus_ut(order).inverse() +
                          det_series(r, order) * t_inv;
    ++report.cells_checked;
    if (split != a_term) fail("partial-fractions", -1, r, to_text(split), to_text(a_term));

    for (int n = 0; n <= max_n; ++n) {
      const auto un = static_cast<std::size_t>(n);
      compare("foata", n, r, foata[un], lhs_coeff(n, r));
      compare("a-series", n, r, a_term[un], s_coefficient(a_parts[un], n, r));
      if (n >= 1) {
        const MPoly defect = b_parts[un] - s_minus_1 * a_parts[un - 1];
        const MPoly poly_side = s_coefficient(defect, n, r);
        compare("telescoping", n, r, telescoped[un] * t_inv, poly_side);
        ++report.cells_checked;
        if (!poly_side.is_zero()) fail("telescoping-vanishes", n, r, to_text(poly_side), "0");
      }
    }
  }
  return report;
}

}  // namespace eulerlab::gf
