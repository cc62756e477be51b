#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

/// Bad arguments or violated preconditions. The CLI maps this to exit code 2.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial division that was required to be exact left a remainder.
class divisibility_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series inversion of something with a vanishing constant term.
class singularity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input does not have the shape an operation needs (e.g. not palindromic).
class shape_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An identity that must hold by construction failed.
class identity_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eulerlab
