#include <doctest.h>

#include "eulerlab/det.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/parse.hpp"
#include "eulerlab/symmetry.hpp"

using namespace eulerlab;

namespace {

MPoly tr(const char* text) { return parse_poly(text, vars::kTR); }
MPoly st(const char* text) { return parse_poly(text, vars::kST); }

// Laplace expansion along the first row.
MPoly cofactor_det(const PolyMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  MPoly total(m.vars());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MPoly& entry = m(rows[0], cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
    const MPoly minor = entry * cofactor_det(m, sub_rows, sub_cols);
    total = (k % 2 == 0) ? total + minor : total - minor;
  }
  return total;
}

MPoly cofactor_det(const PolyMatrix& m) {
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return cofactor_det(m, idx, idx);
}

}  // namespace

TEST_CASE("recurrence_f small cases") {
  CHECK(recurrence_f(0) == tr("1+t"));
  CHECK(recurrence_f(1) == tr("1+t+t^2+tr"));
  CHECK(recurrence_f(2) == tr("1+t+t^2+t^3+3/2 t(t+1)r+1/2 t(t+1)r^2"));
  CHECK_THROWS_AS((void)(recurrence_f(9)), usage_error);
}

TEST_CASE("det displays n <= 4") {
  CHECK(det_Mnr(0) == tr("1+t"));
  CHECK(det_Mnr(1) == tr("1+t+t^2+tr"));
  CHECK(det_Mnr(2) == tr("1+t+t^2+t^3+3/2 t(t+1)r+1/2 t(t+1)r^2"));
  CHECK(det_Mnr(3) == tr("1+t+t^2+t^3+t^4+1/6 t(11t^2+14t+11)r+t(t+1)^2r^2+1/6 t(t^2+4t+1)r^3"));
  CHECK(det_Mnr(4) == tr("1+t+t^2+t^3+t^4+t^5+5/12 t(5t^3+7t^2+7t+5)r+5/24 t(7t^3+17t^2+17t+7)r^2"
                         "+5/12 t(t+1)(t^2+4t+1)r^3+1/24 t(t^3+11t^2+11t+1)r^4"));
}

TEST_CASE("det equals recurrence for n <= 6") {
  for (int n = 0; n <= 6; ++n) CHECK(det_Mnr(n) == recurrence_f(n));
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  for (int n = 0; n <= 4; ++n) {
    for (auto conv : {MatrixConvention::signed_band, MatrixConvention::unsigned_band}) {
      const PolyMatrix m = det_matrix(n, conv);
      CHECK(bareiss_determinant(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("Bareiss handles a zero pivot") {
  PolyMatrix m(2, vars::kTR);
  m(0, 1) = tr("1");
  m(1, 0) = tr("t");
  m(1, 1) = tr("r");
  CHECK(bareiss_determinant(m) == tr("-t"));
}

TEST_CASE("matrix shape") {
  const PolyMatrix m = det_matrix(3);
  CHECK(m.size() == 4);
  CHECK(m(0, 1).is_zero());
  CHECK(m(1, 0) == tr("-r(1+t)"));
  CHECK(m(3, 3) == tr("-1/2 (r-1)(r-2)(r-3)(1+t+t^2+t^3+t^4)") * Rational(1, 3));
}

TEST_CASE("unsigned band differs from the recurrence") {
  CHECK(det_Mnr(1, MatrixConvention::unsigned_band) != recurrence_f(1));
}

TEST_CASE("reconstruct_a") {
  CHECK(reconstruct_a(1) == st("1"));
  CHECK(reconstruct_a(2) == st("1+t"));
  CHECK(reconstruct_a(3) == st("s^2t+2st+t^2+t+1"));
  CHECK(reconstruct_a(4) == st("5s^2t(t+1)+5st(t+1)+t^3+t^2+t+1"));
  for (int n = 1; n <= 7; ++n) CHECK(reconstruct_a(n) == eulerian_a(n));
  CHECK_THROWS_AS((void)(reconstruct_a(0)), usage_error);
}
