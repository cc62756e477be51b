#include <doctest.h>

#include "eulerlab/basis.hpp"
#include "eulerlab/det.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/gf.hpp"
#include "eulerlab/parse.hpp"

using namespace eulerlab;

namespace {

MPoly tpoly(const char* text) { return parse_poly(text, vars::kT); }
MPoly st(const char* text) { return parse_poly(text, vars::kST); }
MPoly tr(const char* text) { return parse_poly(text, vars::kTR); }

// [x^m] of prod (1 + x + ... + x^len-1)-style integer polynomials, by plain convolution.
std::vector<long> conv(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("foata_term") {
  const USeries g0 = gf::foata_term(0, 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(g0[k] == RatFunc(Rational(1)));
  CHECK(gf::foata_term(2, 0)[0] == RatFunc(Rational(1)));
  // every compared coefficient is a polynomial in t
  for (int r = 0; r <= 4; ++r) {
    const USeries g = gf::foata_term(r, 5);
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(g[n].is_polynomial());
      CHECK(to_mpoly(g[n].num(), vars::kT, "t") == gf::lhs_coeff(static_cast<int>(n), r));
    }
  }
}

TEST_CASE("lhs_coeff and f_nkr") {
  for (int r = 0; r <= 4; ++r) CHECK(gf::lhs_coeff(0, r) == tpoly("1"));
  CHECK(gf::lhs_coeff(2, 1) == tpoly("3+t"));
  CHECK(gf::lhs_coeff(3, 0) == tpoly("1"));
  CHECK(gf::f_nkr(3, 1, 1) == Rational(3));
  CHECK(gf::f_nkr(3, 1, 2) == Rational(13));
  CHECK(gf::f_nkr(3, 2, 2) == Rational(4));
  CHECK(gf::f_nkr(2, 1, 0) == Rational(0));
}

TEST_CASE("closed form for f(n,k,r)") {
  CHECK(gf::f_nkr_closed(3, 1, 1) == Rational(3));
  CHECK(gf::f_nkr_closed(3, 1, 2) == Rational(13));
  CHECK(gf::f_nkr_closed(3, 2, 2) == Rational(4));

  // [x^4] (1+x)(1+x+x^2)^3 by hand-rolled convolution
  std::vector<long> p{1, 1};
  for (int i = 0; i < 3; ++i) p = conv(p, {1, 1, 1});
  CHECK(p[4] == 13);
  CHECK(p[6] == 4);

  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= std::max(0, n - 1); ++k) {
      for (int r = 0; r <= 6; ++r) CHECK(gf::f_nkr(n, k, r) == gf::f_nkr_closed(n, k, r));
    }
  }
  // k = 0 row is the identity slice
  for (int n = 1; n <= 5; ++n) CHECK(gf::f_nkr_closed(n, 0, 3) == binomial(n + 3, n));
}

TEST_CASE("literal reading of the closed form disagrees") {
  bool any_mismatch = false;
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int r = 0; r <= 4; ++r)
        any_mismatch |= gf::f_nkr(n, k, r) != gf::f_nkr_closed(n, k, r, gf::Eq1Reading::literal);
  CHECK(any_mismatch);
}

TEST_CASE("stirling numbers") {
  const auto s = gf::stirling2_table(5);
  CHECK(s[0][0] == Rational(1));
  CHECK(s[4][2] == Rational(7));
  CHECK(s[5][3] == Rational(25));
  CHECK(s[5][0] == Rational(0));
}

TEST_CASE("binom_resum") {
  CHECK(gf::binom_resum(tr("1"), 0) == st("1"));
  CHECK(gf::binom_resum(tr("r"), 1) == st("s"));
  CHECK(gf::binom_resum(tr("r^2"), 2) == st("s+s^2"));
  CHECK(gf::binom_resum(tr("1"), 2) == st("1-2s+s^2"));
  CHECK_THROWS_AS((void)(gf::binom_resum(tr("r^3"), 2)), usage_error);
  // value at s = 0 is p(0)
  const MPoly p = tr("2+3t r+1/2 r^2 t^2-r^3");
  CHECK(gf::binom_resum(p, 3).specialize("s", 0).with_vars(vars::kT) ==
        p.specialize("r", 0).with_vars(vars::kT));
}

TEST_CASE("det_series matches the recurrence at integer r") {
  for (int r = 0; r <= 5; ++r) {
    const USeries f = gf::det_series(r, 5);
    for (int n = 0; n <= 5; ++n) {
      const MPoly expected = recurrence_f(n).specialize("r", r).with_vars(vars::kT);
      CHECK(f[static_cast<std::size_t>(n)].is_polynomial());
      CHECK(to_mpoly(f[static_cast<std::size_t>(n)].num(), vars::kT, "t") == expected);
    }
  }
}

TEST_CASE("verify_foata") {
  const gf::FoataReport small = gf::verify_foata(5, 5);
  CHECK(small.pass);
  CHECK(small.failures.empty());
  CHECK(small.cells_checked > 0);
  CHECK(gf::verify_foata(0, 3).pass);
  CHECK_THROWS_AS((void)(gf::verify_foata(9, 1)), usage_error);
}

TEST_CASE("a-series coefficient at n = 3 against a_3") {
  const MPoly a3 = st("s^2t+2st+t^2+t+1");
  for (int r = 0; r <= 5; ++r) {
    const USeries g = gf::a_series_term(r, 3);
    REQUIRE(g[3].is_polynomial());
    CHECK(to_mpoly(g[3].num(), vars::kT, "t") == gf::s_coefficient(a3, 3, r));
  }
}
