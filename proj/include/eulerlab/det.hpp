#pragma once

#include <vector>

#include "eulerlab/mpoly.hpp"

namespace eulerlab {

/// alpha_j = C(r, j) [j+1]_t and beta_j = (-1)^j C(r-1, j) [j+2]_t for
/// j = 0..n, all over {t, r}.
struct RecurrenceData {
  std::vector<MPoly> alpha;
  std::vector<MPoly> beta;
};

RecurrenceData recurrence_data(int n);

/// Square matrix of polynomials over {t, r}, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t size, const VarList& vars);
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] const MPoly& operator()(std::size_t i, std::size_t j) const { return cells_[i * size_ + j]; }
  MPoly& operator()(std::size_t i, std::size_t j) { return cells_[i * size_ + j]; }
  [[nodiscard]] const VarList& vars() const { return vars_; }

 private:
  std::size_t size_;
  VarList vars_;
  std::vector<MPoly> cells_;
};

enum class MatrixConvention {
  signed_band,  ///< m_ij = (-1)^(i-j) alpha_(i-j) for j < n, m_in = beta_i
  unsigned_band,  ///< m_ij = alpha_(i-j) for j < n, m_in = beta_i
};

/// The (n+1) x (n+1) matrix M_{n,r}; entries above the diagonal in the
/// first n columns are zero.
PolyMatrix det_matrix(int n, MatrixConvention convention = MatrixConvention::signed_band);

/// Fraction-free (Bareiss) determinant; every intermediate division is exact.
MPoly bareiss_determinant(PolyMatrix m);

/// f_n solved forward from sum_j (-1)^j alpha_j f_(n-j) = beta_n. 0 <= n <= 8.
MPoly recurrence_f(int n);

/// det(M_{n,r}) by fraction-free elimination. 0 <= n <= 8.
MPoly det_Mnr(int n, MatrixConvention convention = MatrixConvention::signed_band);

/// a_n(s,t) = (-(1+t^(n+1))(1-s)^n + (1-s)^(n+1) sum_r s^r det(M_{n,r})) / t.
/// 1 <= n <= 8. Throws identity_violation if the division by t is not exact.
MPoly reconstruct_a(int n);

}  // namespace eulerlab
