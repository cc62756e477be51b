#include "eulerlab/distributions.hpp"

#include <bit>
#include <cstdint>

#include "eulerlab/perm.hpp"

namespace eulerlab {

namespace {

using Counts = std::vector<std::uint64_t>;

void merge_counts(Counts& into, Counts&& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

void require(bool ok, const std::string& message) {
  if (!ok) throw usage_error(message);
}

std::string range_message(const char* what, int n, int lo, int hi) {
  return std::string(what) + ": n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
         "], got " + std::to_string(n);
}

Rational count(std::uint64_t c) {
  return Rational(mpq_class(mpz_class(static_cast<unsigned long>(c))));
}

// counts indexed [des][exc]
Counts des_exc_counts(int n) {
  const auto sz = static_cast<std::size_t>(n);
  return fold_permutations(
      n, Counts(sz * sz, 0),
      [sz](Counts& acc, std::span<const int>, const PermStats& st) {
        ++acc[static_cast<std::size_t>(st.des) * sz + static_cast<std::size_t>(st.exc)];
      },
      merge_counts);
}

// counts indexed [maj - exc][des][exc]
MPoly maj_des_exc(int n, bool derangements_only) {
  const auto sz = static_cast<std::size_t>(n);
  const std::size_t levels = sz * (sz - 1) / 2 + 1;
  Counts counts = fold_permutations(
      n, Counts(levels * sz * sz, 0),
      [sz, derangements_only](Counts& acc, std::span<const int>, const PermStats& st) {
        if (derangements_only && st.fix != 0) return;
        const auto shift = static_cast<std::size_t>(st.maj - st.exc);
        ++acc[(shift * sz + static_cast<std::size_t>(st.des)) * sz + static_cast<std::size_t>(st.exc)];
      },
      merge_counts);
  MPoly out(vars::kTPQ);
  for (std::size_t m = 0; m < levels; ++m) {
    for (std::size_t d = 0; d < sz; ++d) {
      for (std::size_t e = 0; e < sz; ++e) {
        const std::uint64_t c = counts[(m * sz + d) * sz + e];
        if (c == 0) continue;
        out.add_term({static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(d),
                      static_cast<std::uint32_t>(m)},
                     count(c));
      }
    }
  }
  return out;
}

}  // namespace

MPoly eulerian_st(int n) {
  require(n >= 1 && n <= kMaxEnumerationN, range_message("eulerian_st", n, 1, kMaxEnumerationN));
  const auto sz = static_cast<std::size_t>(n);
  const Counts counts = des_exc_counts(n);
  MPoly out(vars::kST);
  for (std::size_t d = 0; d < sz; ++d) {
    for (std::size_t e = 0; e < sz; ++e) {
      if (counts[d * sz + e] == 0) continue;
      out.add_term({static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(e)}, count(counts[d * sz + e]));
    }
  }
  return out;
}

MPoly classic_eulerian(int n, Statistic stat) {
  require(n >= 1 && n <= kMaxEnumerationN, range_message("classic_eulerian", n, 1, kMaxEnumerationN));
  const auto sz = static_cast<std::size_t>(n);
  const Counts counts = fold_permutations(
      n, Counts(sz, 0),
      [stat](Counts& acc, std::span<const int>, const PermStats& st) {
        ++acc[static_cast<std::size_t>(stat == Statistic::des ? st.des : st.exc)];
      },
      merge_counts);
  MPoly out(vars::kX);
  for (std::size_t k = 0; k < sz; ++k) out.add_term({static_cast<std::uint32_t>(k)}, count(counts[k]));
  return out;
}

MPoly derangement_poly(int n) {
  require(n >= 1 && n <= kMaxEnumerationN, range_message("derangement_poly", n, 1, kMaxEnumerationN));
  const auto sz = static_cast<std::size_t>(n);
  const Counts counts = fold_permutations(
      n, Counts(sz, 0),
      [](Counts& acc, std::span<const int>, const PermStats& st) {
        if (st.fix == 0) ++acc[static_cast<std::size_t>(st.exc)];
      },
      merge_counts);
  MPoly out(vars::kX);
  for (std::size_t k = 0; k < sz; ++k) out.add_term({static_cast<std::uint32_t>(k)}, count(counts[k]));
  return out;
}

MPoly trivariate(int n) {
  require(n >= 1 && n <= 11, range_message("trivariate", n, 1, 11));
  return maj_des_exc(n, false);
}

MPoly derangement_lhs(int n) {
  require(n >= 2 && n <= 11, range_message("derangement_lhs", n, 2, 11));
  return maj_des_exc(n, true);
}

std::vector<MPoly> xi_all(int n, XiReading reading) {
  require(n >= 2 && n <= 11, range_message("xi", n, 2, 11));
  const auto sz = static_cast<std::size_t>(n);
  const std::size_t parts = sz / 2;
  const std::size_t levels = sz * (sz - 1) / 2 + 1;
  // counts indexed [i-1][des][maj] of the summand permutation
  const std::size_t stride = sz * levels;
  Counts counts = fold_permutations(
      n, Counts(parts * stride, 0),
      [n, sz, levels, stride, reading](Counts& acc, std::span<const int> image, const PermStats& st) {
        int inv_buf[kMaxEnumerationN];
        const std::span<int> inv(inv_buf, sz);
        invert_into(image, inv);
        const PermStats inv_st = compute_stats(inv);
        const PermStats& cond = reading == XiReading::literal ? st : inv_st;
        const PermStats& summand = reading == XiReading::literal ? inv_st : st;
        if (!is_stable_subset(cond.des_mask, 2, n - 2)) return;
        const auto k = static_cast<std::size_t>(std::popcount(cond.des_mask));
        ++acc[k * stride + static_cast<std::size_t>(summand.des) * levels +
              static_cast<std::size_t>(summand.maj)];
      },
      merge_counts);
  std::vector<MPoly> out;
  for (std::size_t k = 0; k < parts; ++k) {
    MPoly poly(vars::kPQ);
    for (std::size_t d = 0; d < sz; ++d) {
      for (std::size_t m = 0; m < levels; ++m) {
        const std::uint64_t c = counts[k * stride + d * levels + m];
        if (c == 0) continue;
        poly.add_term({static_cast<std::uint32_t>(d + 1), static_cast<std::uint32_t>(m)}, count(c));
      }
    }
    out.push_back(std::move(poly));
  }
  return out;
}

MPoly xi(int n, int i, XiReading reading) {
  require(n >= 2, range_message("xi", n, 2, 11));
  require(i >= 1 && i <= n / 2, "xi: i must lie in [1, " + std::to_string(n / 2) + "]");
  return xi_all(n, reading)[static_cast<std::size_t>(i - 1)];
}

MPoly exc_slice(int n, int k) {
  require(n >= 1 && n <= kMaxEnumerationN, range_message("exc_slice", n, 1, kMaxEnumerationN));
  require(k >= 0 && k <= n - 1, "exc_slice: k must lie in [0, " + std::to_string(n - 1) + "]");
  return eulerian_st(n).coeff_in("t", static_cast<std::uint32_t>(k)).with_vars(vars::kS);
}

Family parse_family(std::string_view name) {
  if (name == "classic_eulerian") return Family::classic_eulerian;
  if (name == "des_exc") return Family::des_exc;
  if (name == "derangement") return Family::derangement;
  if (name == "trivariate") return Family::trivariate;
  if (name == "xi") return Family::xi;
  if (name == "exc_slice") return Family::exc_slice;
  throw usage_error("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::classic_eulerian: return "classic_eulerian";
    case Family::des_exc: return "des_exc";
    case Family::derangement: return "derangement";
    case Family::trivariate: return "trivariate";
    case Family::xi: return "xi";
    case Family::exc_slice: return "exc_slice";
  }
  return "?";
}

MPoly build(const DistributionSpec& spec) {
  require(spec.n >= 1, "n must be at least 1");
  switch (spec.family) {
    case Family::classic_eulerian: return classic_eulerian(spec.n, Statistic::des);
    case Family::des_exc: return eulerian_st(spec.n);
    case Family::derangement: return derangement_lhs(spec.n);
    case Family::trivariate: return trivariate(spec.n);
    case Family::xi:
      require(spec.extra.has_value(), "family xi needs --i");
      return xi(spec.n, *spec.extra);
    case Family::exc_slice:
      require(spec.extra.has_value(), "family exc_slice needs --k");
      return exc_slice(spec.n, *spec.extra);
  }
  throw usage_error("unknown family");
}

}  // namespace eulerlab
