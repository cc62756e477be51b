#include "eulerlab/verify.hpp"

#include <algorithm>

#include "eulerlab/basis.hpp"
#include "eulerlab/det.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/gf.hpp"
#include "eulerlab/symmetry.hpp"

namespace eulerlab::verify {

void CheckResult::record(bool ok, const std::string& what) {
  lines.push_back((ok ? "PASS " : "FAIL ") + what);
  if (!ok) pass = false;
}

namespace {

std::string nstr(int n) { return "n=" + std::to_string(n); }

}  // namespace

CheckResult macmahon(int max_n) {
  CheckResult out{"macmahon"};
  for (int n = 1; n <= max_n; ++n) {
    const MPoly by_des = classic_eulerian(n, Statistic::des);
    const MPoly by_exc = classic_eulerian(n, Statistic::exc);
    out.record(by_des == by_exc, nstr(n) + (by_des == by_exc ? "" : ": " + to_text(by_des) + " vs " + to_text(by_exc)));
  }
  return out;
}

CheckResult xi_expansion(int max_n, XiReading reading) {
  CheckResult out{"thm01"};
  out.notes.push_back(std::string("xi reading: ") +
                      (reading == XiReading::literal ? "literal (Des(pi) condition, pi^-1 summand)"
                                                     : "transposed (Des(pi^-1) condition, pi summand)"));
  const MPoly t = MPoly::variable(vars::kTPQ, "t");
  const MPoly one = MPoly::constant(vars::kTPQ, Rational(1));
  for (int n = 2; n <= max_n; ++n) {
    const MPoly lhs = derangement_lhs(n);
    const std::vector<MPoly> xis = xi_all(n, reading);
    MPoly rhs(vars::kTPQ);
    for (int i = 1; i <= n / 2; ++i) {
      rhs += xis[static_cast<std::size_t>(i - 1)].with_vars(vars::kTPQ) * pow(t, static_cast<unsigned>(i)) *
             pow(one + t, static_cast<unsigned>(n - 2 * i));
    }
    const bool ok = lhs == rhs;
    out.record(ok, nstr(n) + (ok ? "" : ": difference " + to_text(lhs - rhs)));
  }
  return out;
}

CheckResult b_identity(int max_n) {
  CheckResult out{"thm20"};
  for (int n = 2; n <= max_n; ++n) {
    const BIdentityReport r = verify_b_identity(n);
    std::string detail = nstr(n);
    if (!r.pass) {
      detail += ": b_n-(s-1)a_(n-1) = " + to_text(r.b_defect) + "; A_n-a_n-(s-1)t a_(n-1) = " +
                to_text(r.identity_defect);
    }
    out.record(r.pass, detail);
  }
  return out;
}

CheckResult closed_form(int max_n, int max_r, gf::Eq1Reading reading) {
  CheckResult out{"eq1"};
  out.notes.push_back(reading == gf::Eq1Reading::exchanged
                          ? "closed form read with k and r exchanged: [x^(rk)] (1-x^r)(1-x^(r+1))^n / ((1-x)^(n+1) x^r)"
                          : "closed form read literally: [x^(kr)] (1-x^k)(1-x^(k+1))^n / ((1-x)^(n+1) x^k)");
  for (int n = 1; n <= max_n; ++n) {
    int mismatches = 0;
    int raw_k0_offsets = 0;
    std::string first_witness;
    for (int k = 0; k <= n - 1; ++k) {
      for (int r = 0; r <= max_r; ++r) {
        const Rational series = gf::f_nkr(n, k, r);
        const Rational closed = gf::f_nkr_closed(n, k, r, reading);
        if (series != closed) {
          if (mismatches++ == 0) {
            first_witness = " first witness (k=" + std::to_string(k) + ", r=" + std::to_string(r) +
                            "): series " + series.to_string() + " closed " + closed.to_string();
          }
        }
        if (reading == gf::Eq1Reading::exchanged && k == 0 && gf::li_closed_raw(n, r, 0) != series) {
          ++raw_k0_offsets;
        }
      }
    }
    out.record(mismatches == 0, nstr(n) + (mismatches == 0 ? "" : ": " + std::to_string(mismatches) +
                                                                       " mismatching cells;" + first_witness));
    if (raw_k0_offsets > 0) {
      out.notes.push_back(nstr(n) + ": undegenerated formula at k=0 differs from the series in " +
                          std::to_string(raw_k0_offsets) + " cells (exc=0 slice handled as C(n+r,n))");
    }
  }
  return out;
}

CheckResult gf_proof(int max_n, int max_r) {
  CheckResult out{"gf"};
  const gf::FoataReport report = gf::verify_foata(max_n, max_r);
  out.record(report.pass, "N=" + std::to_string(max_n) + " R=" + std::to_string(max_r) + " (" +
                              std::to_string(report.cells_checked) + " cells)");
  for (const auto& f : report.failures) out.lines.push_back("  " + f);
  return out;
}

CheckResult det_formula(int max_n) {
  CheckResult out{"thT1"};
  for (int n = 0; n <= max_n; ++n) {
    const MPoly det = det_Mnr(n);
    const MPoly rec = recurrence_f(n);
    out.record(det == rec, nstr(n) + " det(M_{n,r}) = recurrence f_n" + (det == rec ? "" : ": " + to_text(det - rec)));
    if (n >= 1) {
      const MPoly rebuilt = reconstruct_a(n);
      const MPoly expected = eulerian_a(n);
      out.record(rebuilt == expected,
                 nstr(n) + " reconstructed a_n = enumerated a_n" +
                     (rebuilt == expected ? "" : ": " + to_text(rebuilt - expected)));
    }
  }
  return out;
}

CheckResult fubini(int max_n) {
  CheckResult out{"fubini"};
  const auto stirling = gf::stirling2_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const Rational at = eulerian_st(n).evaluate(std::vector<Rational>{Rational(2), Rational(1)});
    Rational ordered(0);
    for (int k = 0; k <= n; ++k) ordered += factorial(k) * stirling[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    out.record(at == ordered, nstr(n) + ": A_n(2,1) = " + at.to_string() + ", ordered partitions = " + ordered.to_string());
  }
  return out;
}

CheckResult li_binomial(int max_n) {
  CheckResult out{"li-binomial"};
  for (int n = 2; n <= max_n; ++n) {
    const MPoly a = eulerian_st(n);
    bool ok = true;
    std::string witness;
    for (int k = 1; k <= n - 1; ++k) {
      const Rational got = a.coeff({1, static_cast<std::uint32_t>(k)});
      if (got != binomial(n, k + 1)) {
        ok = false;
        witness = " k=" + std::to_string(k) + ": " + got.to_string() + " vs " + binomial(n, k + 1).to_string();
      }
    }
    out.record(ok, nstr(n) + witness);
  }
  return out;
}

std::vector<std::string_view> suite_names() {
  return {"macmahon", "thm01", "thm20", "eq1", "gf", "thT1", "fubini", "li-binomial"};
}

std::vector<CheckResult> run(std::string_view name, int max_n) {
  if (max_n < 1) throw usage_error("verify: --max-n must be at least 1");
  std::vector<CheckResult> out;
  const bool all = name == "all";
  bool matched = all;
  auto want = [&](std::string_view suite) {
    if (all || name == suite) {
      matched = true;
      return true;
    }
    return false;
  };
  if (want("macmahon")) out.push_back(macmahon(std::min(max_n, 10)));
  if (want("thm01")) out.push_back(xi_expansion(std::min(max_n, 9)));
  if (want("thm20")) out.push_back(b_identity(std::min(max_n, 9)));
  if (want("eq1")) out.push_back(closed_form(std::min(max_n, 9), 6));
  if (want("gf")) out.push_back(gf_proof(std::min(max_n, 8), std::min(max_n, 8)));
  if (want("thT1")) out.push_back(det_formula(std::min(max_n, 8)));
  if (want("fubini")) out.push_back(fubini(std::min(max_n, 13)));
  if (want("li-binomial")) out.push_back(li_binomial(std::min(max_n, 13)));
  if (!matched) throw usage_error("unknown check '" + std::string(name) + "'");
  return out;
}

}  // namespace eulerlab::verify
