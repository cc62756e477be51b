#include "eulerlab/parse.hpp"

#include <cctype>
#include <string>

#include "eulerlab/errors.hpp"

namespace eulerlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  MPoly parse() {
    MPoly out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw usage_error("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                      std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MPoly expression() {
    MPoly acc(vars_);
    bool first = true;
    for (;;) {
      char c = peek();
      Rational sign(1);
      if (c == '+' || c == '-') {
        sign = c == '-' ? Rational(-1) : Rational(1);
        ++pos_;
      } else if (!first) {
        return acc;
      }
      acc += term() * sign;
      first = false;
    }
  }

  bool starts_factor(char c) const {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  std::string_view integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return text_.substr(start, pos_ - start);
  }

  MPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string_view num = integer();
      if (peek() == '/') {
        ++pos_;
        std::string_view den = integer();
        return MPoly::constant(vars_, Rational::from_parts(num, den));
      }
      return MPoly::constant(vars_, Rational::parse(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name(1, c);
      ++pos_;
      for (const auto& v : vars_) {
        if (v == name) return MPoly::variable(vars_, name);
      }
      --pos_;
      fail("unknown variable '" + name + "'");
    }
    fail("expected a factor");
  }

  std::string_view text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

}  // namespace eulerlab
