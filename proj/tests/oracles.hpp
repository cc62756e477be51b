#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// enumeration, statistics, series or determinant code, so the unit tests can
// compare the two routes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

namespace oracle {

struct NaiveStats {
  int des = 0, exc = 0, fix = 0, maj = 0;
  std::vector<int> des_set;
};

inline NaiveStats naive_stats(const std::vector<int>& pi) {
  NaiveStats st;
  const int n = static_cast<int>(pi.size());
  for (int i = 1; i <= n - 1; ++i) {
    if (pi[i - 1] > pi[i]) {
      st.des_set.push_back(i);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (pi[i - 1] > i) st.exc++;
    if (pi[i - 1] == i) st.fix++;
  }
  st.des = static_cast<int>(st.des_set.size());
  st.maj = std::accumulate(st.des_set.begin(), st.des_set.end(), 0);
  return st;
}

inline std::vector<int> naive_inverse(const std::vector<int>& pi) {
  std::vector<int> out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[pi[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

/// All permutations by recursive insertion (not lexicographic successor).
inline void all_perms(int n, std::vector<std::vector<int>>& out, std::vector<int>& cur, std::vector<bool>& used) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    used[v] = true;
    cur.push_back(v);
    all_perms(n, out, cur, used);
    cur.pop_back();
    used[v] = false;
  }
}

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  all_perms(n, out, cur, used);
  return out;
}

/// (des, exc) -> count
inline std::map<std::pair<int, int>, long> des_exc_table(int n) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& pi : all_perms(n)) {
    const auto st = naive_stats(pi);
    out[{st.des, st.exc}]++;
  }
  return out;
}

inline long subfactorial(int n) {
  if (n == 0) return 1;
  if (n == 1) return 0;
  long a = 1, b = 0;  // D_0, D_1
  for (int m = 2; m <= n; ++m) {
    const long c = (m - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

/// Ordered set partitions of [n], counted as maps [n] -> [k] onto an
/// initial segment of the positive integers.
inline long ordered_partitions_bruteforce(int n) {
  long total = 0;
  std::vector<int> f(n, 0);
  long combos = 1;
  for (int i = 0; i < n; ++i) combos *= n;
  for (long code = 0; code < combos; ++code) {
    long c = code;
    int top = 0;
    std::vector<bool> hit(n + 1, false);
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(c % n) + 1;
      c /= n;
      hit[f[i]] = true;
      top = std::max(top, f[i]);
    }
    bool onto = true;
    for (int v = 1; v <= top; ++v) onto = onto && hit[v];
    if (onto) ++total;
  }
  return total;
}

/// Dense integer polynomial product, truncated to `keep` coefficients.
inline std::vector<long long> mul_trunc(const std::vector<long long>& a, const std::vector<long long>& b, std::size_t keep) {
  std::vector<long long> out(keep, 0);
  for (std::size_t i = 0; i < a.size() && i < keep; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < keep; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace oracle
