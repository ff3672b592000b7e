#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  Pole,
  Unpairable,
  NonInvertible,
  NotTerminating,
  OutOfRange,
  BudgetExceeded,
  DivisionByZero,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NotPrime: return "not prime";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Unpairable: return "unpairable gamma ratio";
    case ErrorKind::NonInvertible: return "non-invertible series";
    case ErrorKind::NotTerminating: return "not terminating";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::DivisionByZero: return "division by zero";
  }
  return "unknown";
}

// Every failure raised by the library carries a kind so callers (the harness,
// the tests) can distinguish e.g. a pole from an unpairable Gamma ratio.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace supercong
