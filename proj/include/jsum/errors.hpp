#pragma once

#include <stdexcept>
#include <string>

namespace jsum {

/// Thrown when an argument violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a runtime self-check fails. Indicates a bug in this
/// library, not bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when an iterative solve exhausts its budget before meeting its
/// stopping rule. Carries the best value found so far.
class UnconvergedError : public std::runtime_error {
 public:
  UnconvergedError(const std::string& what, double best_value)
      : std::runtime_error(what), best_value_(best_value) {}

  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

}  // namespace jsum
