#pragma once

#include <stdexcept>
#include <string>

namespace abelcat {

/// Malformed input: mismatched endpoints, bad shapes, invalid data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold (e.g. factoring a
/// morphism through a kernel it is not annihilated by).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace abelcat
