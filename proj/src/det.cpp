#include "eulerlab/det.hpp"

#include <utility>

#include "eulerlab/basis.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/gf.hpp"

namespace eulerlab {

namespace {

void require_n(int n, int lo, const char* what) {
  if (n < lo || n > 8) {
    throw usage_error(std::string(what) + ": n must lie in [" + std::to_string(lo) + ", 8]");
  }
}

}  // namespace

RecurrenceData recurrence_data(int n) {
  RecurrenceData out;
  for (int j = 0; j <= n; ++j) {
    out.alpha.push_back(binom_poly(j, 0, vars::kTR) * t_analog(j + 1, vars::kTR));
    out.beta.push_back(binom_poly(j, -1, vars::kTR) * t_analog(j + 2, vars::kTR) *
                       Rational(j % 2 == 0 ? 1 : -1));
  }
  return out;
}

PolyMatrix::PolyMatrix(std::size_t size, const VarList& vars)
    : size_(size), vars_(vars), cells_(size * size, MPoly(vars)) {}

PolyMatrix det_matrix(int n, MatrixConvention convention) {
  const RecurrenceData data = recurrence_data(n);
  const auto size = static_cast<std::size_t>(n + 1);
  PolyMatrix m(size, vars::kTR);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j + 1 < size; ++j) {
      if (i < j) continue;
      MPoly entry = data.alpha[i - j];
      if (convention == MatrixConvention::signed_band && (i - j) % 2 == 1) entry = -entry;
      m(i, j) = std::move(entry);
    }
    m(i, size - 1) = data.beta[i];
  }
  return m;
}

MPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t size = m.size();
  if (size == 0) return MPoly::constant(m.vars(), Rational(1));
  Rational sign(1);
  MPoly prev_pivot = MPoly::constant(m.vars(), Rational(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == size) return MPoly(m.vars());
      for (std::size_t j = 0; j < size; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev_pivot);
      }
      m(i, k) = MPoly(m.vars());
    }
    prev_pivot = m(k, k);
  }
  return m(size - 1, size - 1) * sign;
}

MPoly recurrence_f(int n) {
  require_n(n, 0, "recurrence_f");
  const RecurrenceData data = recurrence_data(n);
  std::vector<MPoly> f;
  for (int m = 0; m <= n; ++m) {
    MPoly value = data.beta[static_cast<std::size_t>(m)];
    for (int j = 1; j <= m; ++j) {
      MPoly term = data.alpha[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(m - j)];
      if (j % 2 == 0) {
        value -= term;
      } else {
        value += term;
      }
    }
    f.push_back(std::move(value));  // alpha_0 = 1
  }
  return f.back();
}

MPoly det_Mnr(int n, MatrixConvention convention) {
  require_n(n, 0, "det_Mnr");
  return bareiss_determinant(det_matrix(n, convention));
}

MPoly reconstruct_a(int n) {
  require_n(n, 1, "reconstruct_a");
  const MPoly s = MPoly::variable(vars::kST, "s");
  const MPoly t = MPoly::variable(vars::kST, "t");
  const MPoly one = MPoly::constant(vars::kST, Rational(1));
  const MPoly boundary = (one + pow(t, static_cast<unsigned>(n + 1))) * pow(one - s, static_cast<unsigned>(n));
  const MPoly total = gf::binom_resum(det_Mnr(n), n) - boundary;
  try {
    return exact_divide(total, t);
  } catch (const divisibility_error&) {
    throw identity_violation("reconstruct_a(" + std::to_string(n) + "): numerator " + to_text(total) +
                             " is not divisible by t");
  }
}

}  // namespace eulerlab
