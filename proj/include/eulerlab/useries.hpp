#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eulerlab/ratfunc.hpp"

namespace eulerlab {

/// Power series in u truncated after u^order, with coefficients in Q(t).
class USeries {
 public:
  explicit USeries(std::size_t order) : coeffs_(order + 1) {}
  USeries(std::size_t order, std::vector<RatFunc> coeffs);

  static USeries one(std::size_t order);
  static USeries constant(std::size_t order, const RatFunc& c);
  /// a + b*u
  static USeries linear(std::size_t order, const RatFunc& a, const RatFunc& b);

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const RatFunc& operator[](std::size_t k) const { return coeffs_.at(k); }
  [[nodiscard]] const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;

  /// Multiplicative inverse; throws singularity_error if coeffs[0] == 0.
  [[nodiscard]] USeries inverse() const;

  USeries& operator+=(const USeries& o);
  USeries& operator-=(const USeries& o);
  USeries& operator*=(const RatFunc& c);
  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(USeries a, const RatFunc& c) { return a *= c; }
  friend bool operator==(const USeries& a, const USeries& b) = default;

 private:
  void require_same_order(const USeries& o) const;
  std::vector<RatFunc> coeffs_;
};

/// Integer power; negative exponents go through inverse().
USeries pow(const USeries& base, int exponent);

std::string to_text(const USeries& f);

}  // namespace eulerlab
