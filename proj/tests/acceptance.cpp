// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "eulerlab/det.hpp"
#include "eulerlab/distributions.hpp"
#include "eulerlab/gf.hpp"
#include "eulerlab/parse.hpp"
#include "eulerlab/symmetry.hpp"
#include "eulerlab/verify.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace eulerlab;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

MPoly st(const char* text) { return parse_poly(text, vars::kST); }
MPoly tpq(const char* text) { return parse_poly(text, vars::kTPQ); }
MPoly tr(const char* text) { return parse_poly(text, vars::kTR); }

Verdict from_suite(const verify::CheckResult& r) {
  Verdict v;
  for (const auto& line : r.lines) {
    if (line.rfind("FAIL", 0) == 0) {
      v.require(false, line);
      break;
    }
  }
  v.require(r.pass, r.name + " reported failure");
  return v;
}

Verdict fixtures() {
  Verdict v;
  const char* a[] = {"1", "1+st", "1+(3s+s^2)t+st^2", "1+(6s+5s^2)t+(4s+6s^2+s^3)t^2+st^3",
                     "1+(10s+15s^2+s^3)t+(10s+36s^2+19s^3+s^4)t^2+(5s+15s^2+6s^3)t^3+st^4"};
  const char* parts[][2] = {{"1", "0"},
                            {"1+t", "1"},
                            {"1+9t+t^2", "1+t"},
                            {"1+31t+31t^2+t^3", "1+9t+t^2"},
                            {"1+87t+301t^2+87t^3+t^4", "1+31t+31t^2+t^3"}};
  for (int n = 1; n <= 5; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    v.require(eulerian_st(n) == st(a[n - 1]), "A_n(s,t) display " + tag);
    const SymDecomp dec = sym_decompose(eulerian_st(n).specialize("s", 2), "t", n - 1);
    v.require(dec.a == st(parts[n - 1][0]) && dec.b == st(parts[n - 1][1]), "A_n(2,t) decomposition " + tag);
  }
  const SymDecomp d5 = decompose_eulerian(5);
  v.require(d5.a == st("1+(1+9s+15s^2+s^3)t+(1+14s+36s^2+14s^3+s^4)t^2+(1+9s+15s^2+s^3)t^3+t^4") &&
                d5.b == st("(s-1)(1+t)(1+5s(1+s)t+t^2)"),
            "A_5(s,t) decomposition");
  const char* tri[] = {"1", "1+pt", "1+(2p+pq+p^2q^2)t+pt^2",
                       "1+(3p+2pq+pq^2+2p^2q^2+2p^2q^3+p^2q^4)t+(3p+pq+p^2q+3p^2q^2+2p^2q^3+p^3q^4)t^2+pt^3"};
  for (int n = 1; n <= 4; ++n) {
    v.require(trivariate(n) == tpq(tri[n - 1]), "trivariate display n=" + std::to_string(n));
  }
  const SymDecomp t4 = sym_decompose(trivariate(4), "t", 3);
  v.require(t4.a == tpq("(1+t)(1+(p+p^2q^2)(2+2q+q^2)t+t^2)") &&
                t4.b == tpq("(p-1)(1+(1+pq+pq^2+p^2q^4)t+t^2)"),
            "trivariate A_4 decomposition");
  return v;
}

Verdict xi_expansion() {
  Verdict literal = from_suite(verify::xi_expansion(7, XiReading::literal));
  if (literal.ok) {
    literal.detail = "literal reading (condition on pi, summand on pi^-1) validates";
    return literal;
  }
  Verdict transposed = from_suite(verify::xi_expansion(7, XiReading::transposed));
  transposed.detail = (transposed.ok ? "literal reading failed; transposed reading validates"
                                     : "both readings fail: " + transposed.detail);
  return transposed;
}

Verdict closed_form() {
  Verdict v = from_suite(verify::closed_form(6, 6, gf::Eq1Reading::exchanged));
  v.require(gf::f_nkr(3, 1, 1) == Rational(3) && gf::f_nkr_closed(3, 1, 1) == Rational(3), "f(3,1,1) = 3");
  v.require(gf::f_nkr(3, 1, 2) == Rational(13) && gf::f_nkr_closed(3, 1, 2) == Rational(13), "f(3,1,2) = 13");
  v.require(gf::f_nkr(3, 2, 2) == Rational(4) && gf::f_nkr_closed(3, 2, 2) == Rational(4), "f(3,2,2) = 4");
  if (v.ok) v.detail = "k and r exchanged; k = 0 row is C(n+r, n)";
  return v;
}

Verdict foata() {
  const gf::FoataReport rep = gf::verify_foata(7, 7);
  Verdict v;
  v.require(rep.pass, rep.failures.empty() ? "verify_foata failed" : rep.failures.front());
  if (v.ok) v.detail = std::to_string(rep.cells_checked) + " cells";
  return v;
}

Verdict det_theorem() {
  Verdict v;
  const char* displays[] = {
      "1+t", "1+t+t^2+tr", "1+t+t^2+t^3+3/2 t(t+1)r+1/2 t(t+1)r^2",
      "1+t+t^2+t^3+t^4+1/6 t(11t^2+14t+11)r+t(t+1)^2r^2+1/6 t(t^2+4t+1)r^3",
      "1+t+t^2+t^3+t^4+t^5+5/12 t(5t^3+7t^2+7t+5)r+5/24 t(7t^3+17t^2+17t+7)r^2"
      "+5/12 t(t+1)(t^2+4t+1)r^3+1/24 t(t^3+11t^2+11t+1)r^4"};
  for (int n = 0; n <= 4; ++n) v.require(det_Mnr(n) == tr(displays[n]), "det display n=" + std::to_string(n));
  for (int n = 0; n <= 6; ++n) v.require(det_Mnr(n) == recurrence_f(n), "det = recurrence n=" + std::to_string(n));
  for (int n = 1; n <= 7; ++n) {
    v.require(reconstruct_a(n) == eulerian_a(n), "reconstructed a_n n=" + std::to_string(n));
  }
  v.require(reconstruct_a(3) == st("s^2t+2st+t^2+t+1"), "a_3 display");
  v.require(reconstruct_a(4) == st("5s^2t(t+1)+5st(t+1)+t^3+t^2+t+1"), "a_4 display");
  return v;
}

Verdict fubini() {
  Verdict v;
  const long expected[] = {1, 3, 13, 75, 541};
  for (int n = 1; n <= 5; ++n) {
    const Rational value = eulerian_st(n).evaluate(std::vector<Rational>{Rational(2), Rational(1)});
    const std::string tag = "n=" + std::to_string(n);
    v.require(value == Rational(expected[n - 1]), "A_n(2,1) " + tag);
    v.require(value == Rational(oracle::ordered_partitions_bruteforce(n)), "ordered partition count " + tag);
  }
  return v;
}

Verdict li_binomial() {
  Verdict v;
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      v.require(exc_slice(n, k).coeff({1}) == binomial(n, k + 1),
                "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return v;
}

Verdict scan() {
  Verdict v;
  int points = 0;
  for (int n = 1; n <= 7; ++n) {
    const MPoly tri = trivariate(n);
    for (const Rational& p : {Rational(3, 2), Rational(2), Rational(3)}) {
      for (const Rational& q : {Rational(1), Rational(2), Rational(3)}) {
        const ScanReport r = conjecture_scan(tri, n, p, q);
        ++points;
        v.require(r.gamma_positive && r.alternatingly_increasing,
                  "counterexample at n=" + std::to_string(n) + " p=" + p.to_string() + " q=" + q.to_string());
      }
    }
  }
  if (v.ok) v.detail = std::to_string(points) + " grid points";
  return v;
}

Verdict properties() {
  Verdict v;
  const std::pair<const char*, props::Outcome> runs[] = {
      {"ring axioms", props::ring_axioms(1000)},
      {"exact division", props::exact_division(1000)},
      {"decomposition uniqueness", props::decomposition_uniqueness(1000)},
      {"gamma reconstruction", props::gamma_reconstruction(1000)},
      {"serializer round-trip", props::serializer_roundtrip(1000)},
  };
  for (const auto& [name, out] : runs) {
    v.require(out.ok(), std::string(name) + ": " + out.first_failure);
    v.require(out.cases == 1000, std::string(name) + ": wrong case count");
  }
  if (v.ok) v.detail = "5 x 1000 cases";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double bound_s;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {1, "fixtures", 1, fixtures},
      {2, "macmahon", 30, [] { return from_suite(verify::macmahon(9)); }},
      {3, "b_n and A_n identities", 30, [] { return from_suite(verify::b_identity(9)); }},
      {4, "derangement xi expansion", 20, xi_expansion},
      {5, "f(n,k,r) closed form", 5, closed_form},
      {6, "generating-function proof", 30, foata},
      {7, "determinant formula", 20, det_theorem},
      {8, "fubini", 1, fubini},
      {9, "des=1 binomial count", 30, li_binomial},
      {10, "gamma-positivity scan", 30, scan},
      {11, "property suites", 10, properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.bound_s;
    const bool pass = v.ok && in_time;
    if (!pass) ++failures;
    std::string detail = v.detail;
    if (v.ok && !in_time) detail = "over time bound";
    std::printf("%s criterion %2d %-28s %8.3fs (bound %gs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.bound_s, detail.empty() ? "" : "  ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
