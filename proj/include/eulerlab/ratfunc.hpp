#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eulerlab/rational.hpp"

namespace eulerlab {

/// Dense univariate polynomial over Rational; coeffs[k] multiplies t^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<Rational> coeffs) : UPoly(std::vector<Rational>(coeffs)) {}
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  /// c * t^k
  static UPoly monomial(const Rational& c, std::size_t k);

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  [[nodiscard]] Rational lead() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  [[nodiscard]] Rational evaluate(const Rational& at) const;
  [[nodiscard]] UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return a * Rational(-1); }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};

UDivision divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
std::string to_text(const UPoly& f, const std::string& var = "t");

/// Element of Q(t): num/den with gcd(num, den) = 1 and monic den.
class RatFunc {
 public:
  RatFunc() : den_(UPoly::constant(Rational(1))) {}
  RatFunc(const Rational& c) : num_(UPoly::constant(c)), den_(UPoly::constant(Rational(1))) {}  // NOLINT
  RatFunc(UPoly num) : num_(std::move(num)), den_(UPoly::constant(Rational(1))) {}  // NOLINT
  RatFunc(UPoly num, UPoly den);

  [[nodiscard]] const UPoly& num() const { return num_; }
  [[nodiscard]] const UPoly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
  [[nodiscard]] RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

std::string to_text(const RatFunc& f, const std::string& var = "t");
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace eulerlab
