#include "eulerlab/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "eulerlab/errors.hpp"

namespace eulerlab {

namespace vars {

VarList ordered(std::initializer_list<std::string_view> names) {
  VarList out(names.begin(), names.end());
  auto rank = [](const std::string& v) {
    auto it = std::find(kGlobalOrder.begin(), kGlobalOrder.end(), v);
    return static_cast<std::size_t>(it - kGlobalOrder.begin());
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
  return out;
}

}  // namespace vars

MPoly MPoly::constant(const VarList& vars, const Rational& c) {
  return monomial(vars, Exponent(vars.size(), 0), c);
}

MPoly MPoly::variable(const VarList& vars, std::string_view name) {
  MPoly out(vars);
  Exponent e(vars.size(), 0);
  e[out.var_index(name)] = 1;
  out.add_term(e, Rational(1));
  return out;
}

MPoly MPoly::monomial(const VarList& vars, Exponent e, const Rational& c) {
  if (e.size() != vars.size()) throw usage_error("exponent vector length does not match variable list");
  MPoly out(vars);
  out.add_term(e, c);
  return out;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

std::size_t MPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw usage_error("variable '" + std::string(name) + "' is not in the variable list");
}

bool MPoly::has_var(std::string_view name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size()) throw usage_error("exponent vector length does not match variable list");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MPoly::degree_in(std::string_view name) const {
  const std::size_t i = var_index(name);
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e[i]));
  return deg;
}

int MPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return deg;
}

MPoly MPoly::coeff_in(std::string_view name, std::uint32_t k) const {
  const std::size_t i = var_index(name);
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponent f = e;
    f[i] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::specialize(std::string_view name, const Rational& value) const {
  const std::size_t i = var_index(name);
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Rational scaled = c;
    for (std::uint32_t k = 0; k < e[i]; ++k) scaled *= value;
    Exponent f = e;
    f[i] = 0;
    out.add_term(f, scaled);
  }
  return out;
}

MPoly MPoly::substitute(std::string_view name, const MPoly& value) const {
  require_same_vars(value, "substitute");
  const std::size_t i = var_index(name);
  const int deg = degree_in(name);
  std::vector<MPoly> powers;
  powers.push_back(constant(vars_, Rational(1)));
  for (int k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[i] = 0;
    out += monomial(vars_, f, c) * powers[e[i]];
  }
  return out;
}

Rational MPoly::evaluate(std::span<const Rational> values) const {
  if (values.size() != vars_.size()) throw usage_error("evaluate: wrong number of values");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= values[i];
    }
    total += term;
  }
  return total;
}

MPoly MPoly::with_vars(const VarList& target) const {
  std::vector<std::ptrdiff_t> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it != target.end()) where[i] = it - target.begin();
  }
  MPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponent f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) {
        throw usage_error("with_vars: variable '" + vars_[i] + "' occurs but is not in the target list");
      }
      f[static_cast<std::size_t>(where[i])] += e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

MPoly MPoly::rename(std::string_view from, std::string_view to) const {
  const std::size_t i = var_index(from);
  if (from != to && has_var(to)) throw usage_error("rename: target variable already present");
  MPoly out = *this;
  out.vars_[i] = std::string(to);
  return out;
}

std::vector<Rational> MPoly::univariate_coeffs(std::string_view name) const {
  const std::size_t i = var_index(name);
  std::vector<Rational> out(static_cast<std::size_t>(degree_in(name) + 1), Rational(0));
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j != i && e[j] != 0) {
        throw shape_error("univariate_coeffs: polynomial involves '" + vars_[j] + "'");
      }
    }
    out[e[i]] = c;
  }
  return out;
}

MPoly MPoly::from_univariate(const VarList& vars, std::string_view name,
                             std::span<const Rational> coeffs) {
  MPoly out(vars);
  const std::size_t i = out.var_index(name);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e(vars.size(), 0);
    e[i] = static_cast<std::uint32_t>(k);
    out.add_term(e, coeffs[k]);
  }
  return out;
}

void MPoly::require_same_vars(const MPoly& o, const char* what) const {
  if (vars_ != o.vars_) throw usage_error(std::string(what) + ": variable lists differ");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_vars(o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_vars(o, "sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_vars(b, "mul");
  MPoly out(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly operator-(const MPoly& a) {
  MPoly out = a;
  out *= Rational(-1);
  return out;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.vars(), Rational(1));
  MPoly square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

MPoly exact_divide(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw usage_error("exact_divide: division by zero polynomial");
  if (f.vars() != g.vars()) throw usage_error("exact_divide: variable lists differ");
  const auto& [g_lead_exp, g_lead] = *g.terms().rbegin();
  MPoly quotient(f.vars());
  MPoly rest = f;
  while (!rest.is_zero()) {
    const auto& [r_exp, r_coeff] = *rest.terms().rbegin();
    Exponent shift(r_exp.size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (r_exp[i] < g_lead_exp[i]) {
        throw divisibility_error("exact_divide: " + to_text(g) + " does not divide " + to_text(f));
      }
      shift[i] = r_exp[i] - g_lead_exp[i];
    }
    MPoly step = MPoly::monomial(f.vars(), shift, r_coeff / g_lead);
    quotient += step;
    rest -= step * g;
  }
  return quotient;
}

MPoly reciprocal_in(const MPoly& f, std::string_view var, int d) {
  const std::size_t i = f.var_index(var);
  if (d < f.degree_in(var)) {
    throw usage_error("reciprocal_in: degree in " + std::string(var) + " exceeds " + std::to_string(d));
  }
  MPoly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent r = e;
    r[i] = static_cast<std::uint32_t>(d) - e[i];
    out.add_term(r, c);
  }
  return out;
}

namespace {

std::vector<std::pair<Exponent, Rational>> display_order(const MPoly& f) {
  std::vector<std::pair<Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  auto degree = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const auto da = degree(a.first);
    const auto db = degree(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  return terms;
}

template <class Monomial, class Scalar>
std::string render(const MPoly& f, Monomial monomial, Scalar scalar, const char* plus, const char* minus) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : display_order(f)) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? minus : plus;
    }
    first = false;
    const std::string mono = monomial(f.vars(), e);
    if (mono.empty()) {
      out += scalar(mag, false);
    } else {
      if (mag != Rational(1)) out += scalar(mag, true);
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const MPoly& f) {
  auto monomial = [](const VarList& vars, const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  };
  auto scalar = [](const Rational& c, bool times) {
    std::string s = c.is_integer() ? c.to_string() : "(" + c.to_string() + ")";
    return times ? s + "*" : s;
  };
  return render(f, monomial, scalar, " + ", " - ");
}

std::string to_latex(const MPoly& f) {
  auto monomial = [](const VarList& vars, const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += vars[i];
      if (e[i] > 1) out += "^{" + std::to_string(e[i]) + "}";
    }
    return out;
  };
  auto scalar = [](const Rational& c, bool) {
    if (c.is_integer()) return c.to_string();
    return "\\frac{" + c.numerator_string() + "}{" + c.denominator_string() + "}";
  };
  return render(f, monomial, scalar, "+", "-");
}

std::ostream& operator<<(std::ostream& os, const MPoly& f) { return os << to_text(f); }

}  // namespace eulerlab
