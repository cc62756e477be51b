#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerlab/mpoly.hpp"

namespace eulerlab {

// Every builder here is a single fold over S_n; none of them uses a
// recurrence or closed form.

/// A_n(s,t) = sum over S_n of s^des t^exc, over vars {s, t}. 1 <= n <= 13.
MPoly eulerian_st(int n);

enum class Statistic { des, exc };
/// A_n(x) from one statistic, over {x}.
MPoly classic_eulerian(int n, Statistic stat);

/// d_n(x) = sum over derangements of x^exc, over {x}.
MPoly derangement_poly(int n);

/// sum over S_n of q^(maj-exc) p^des t^exc, over {t, p, q}. 1 <= n <= 11.
MPoly trivariate(int n);

/// The same sum restricted to derangements. 2 <= n <= 11.
MPoly derangement_lhs(int n);

/// Which permutation carries the descent-set condition in xi_{n,i}.
enum class XiReading {
  literal,     ///< condition on Des(pi), summand p^(1+des(pi^-1)) q^maj(pi^-1)
  transposed,  ///< condition on Des(pi^-1), summand p^(1+des(pi)) q^maj(pi)
};

/// xi_{n,i}(p,q) over {p, q}: sum over pi whose descent set lies in
/// Stab([2, n-2]) and has i-1 elements. 2 <= n <= 11, 1 <= i <= n/2.
MPoly xi(int n, int i, XiReading reading = XiReading::literal);
/// xi_{n,1} .. xi_{n,floor(n/2)} from one enumeration.
std::vector<MPoly> xi_all(int n, XiReading reading = XiReading::literal);

/// Coefficient of t^k in A_n(s,t), over {s}. 0 <= k <= n-1.
MPoly exc_slice(int n, int k);

enum class Family { classic_eulerian, des_exc, derangement, trivariate, xi, exc_slice };

struct DistributionSpec {
  Family family = Family::des_exc;
  int n = 1;
  std::optional<int> extra;  // i for xi, k for exc_slice
};

Family parse_family(std::string_view name);
std::string_view family_name(Family f);
/// Checks the range of n and the extra index, then builds the polynomial.
MPoly build(const DistributionSpec& spec);

}  // namespace eulerlab
