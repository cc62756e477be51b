#include "eulerlab/useries.hpp"

#include <algorithm>

#include "eulerlab/errors.hpp"

namespace eulerlab {

USeries::USeries(std::size_t order, std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

USeries USeries::one(std::size_t order) { return constant(order, RatFunc(Rational(1))); }

USeries USeries::constant(std::size_t order, const RatFunc& c) {
  USeries out(order);
  out.coeffs_[0] = c;
  return out;
}

USeries USeries::linear(std::size_t order, const RatFunc& a, const RatFunc& b) {
  USeries out(order);
  out.coeffs_[0] = a;
  if (order >= 1) out.coeffs_[1] = b;
  return out;
}

bool USeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatFunc& c) { return c.is_zero(); });
}

void USeries::require_same_order(const USeries& o) const {
  if (o.order() != order()) throw usage_error("series orders differ");
}

USeries& USeries::operator+=(const USeries& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

USeries& USeries::operator-=(const USeries& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

USeries& USeries::operator*=(const RatFunc& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

USeries operator*(const USeries& a, const USeries& b) {
  a.require_same_order(b);
  USeries out(a.order());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < out.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

USeries USeries::inverse() const {
  if (coeffs_[0].is_zero()) throw singularity_error("series inverse: constant term is zero");
  USeries out(order());
  const RatFunc c0_inv = coeffs_[0].inverse();
  out.coeffs_[0] = c0_inv;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    RatFunc acc;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -(acc * c0_inv);
  }
  return out;
}

USeries pow(const USeries& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  USeries result = USeries::one(base.order());
  for (int k = 0; k < exponent; ++k) result = result * base;
  return result;
}

std::string to_text(const USeries& f) {
  std::string out;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (f[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_text(f[k]) + ")";
    if (k > 0) out += "*u^" + std::to_string(k);
  }
  out += (out.empty() ? "O(u^" : " + O(u^") + std::to_string(f.order() + 1) + ")";
  return out;
}

}  // namespace eulerlab
