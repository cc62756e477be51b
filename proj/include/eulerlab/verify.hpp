#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulerlab/distributions.hpp"
#include "eulerlab/gf.hpp"

namespace eulerlab::verify {

struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool pass = true;
  /// "PASS ..." / "FAIL ..." lines, one per checked case.
  std::vector<std::string> lines;
  /// Informational lines that do not affect pass/fail.
  std::vector<std::string> notes;

  void record(bool ok, const std::string& what);
};

/// des- and exc-distributions agree over S_n, n = 1..max_n.
CheckResult macmahon(int max_n);
/// Derangement LHS = sum_i xi_{n,i} t^i (1+t)^(n-2i), n = 2..max_n.
CheckResult xi_expansion(int max_n, XiReading reading = XiReading::literal);
/// b_n = (s-1) a_(n-1) and A_n = a_n + (s-1) t a_(n-1), n = 2..max_n.
CheckResult b_identity(int max_n);
/// f(n,k,r) from the series against the closed form, n <= max_n, k < n, r <= max_r.
CheckResult closed_form(int max_n, int max_r, gf::Eq1Reading reading = gf::Eq1Reading::exchanged);
/// Generating-function proof steps through order u^N, s^R.
CheckResult gf_proof(int max_n, int max_r);
/// det = recurrence, and reconstruct_a = enumerated a_n, n up to max_n.
CheckResult det_formula(int max_n);
/// A_n(2,1) equals sum_k k! S(n,k).
CheckResult fubini(int max_n);
/// #{des = 1, exc = k} = C(n, k+1) for 1 <= k <= n-1.
CheckResult li_binomial(int max_n);

std::vector<std::string_view> suite_names();
/// Runs one named suite ("all" runs every suite) with caps applied per suite.
std::vector<CheckResult> run(std::string_view name, int max_n);

}  // namespace eulerlab::verify
