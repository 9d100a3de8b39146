#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyarea {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A negative exponent appeared while building a polynomial-mode value.
struct NegativeExponentError : Error {
  using Error::Error;
};

// Operands live in different rings (mode or variable count differ).
struct ModeMismatchError : Error {
  using Error::Error;
};

struct EmptySupportError : Error {
  using Error::Error;
};

struct ZeroInputError : Error {
  using Error::Error;
};

// The queried element is not in the ideal.
struct NotMemberError : Error {
  using Error::Error;
};

// A configured step/size/time budget ran out before the computation finished.
struct BudgetExceededError : Error {
  using Error::Error;
};

// The element is a verified member but no certificate exists inside the
// theorem search radius. This is a finding worth recording, not a normal
// failure mode; see area_exact.
struct RadiusExhaustedError : Error {
  using Error::Error;
};

struct BadConversionMatrixError : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace polyarea
