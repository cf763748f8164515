#pragma once

#include <stdexcept>
#include <string>

namespace qzf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, conductor mismatch or overflow, malformed exact values.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Unknown or unsupported group / subgroup specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold did not. Always a bug, never a tolerance issue.
class VerificationError : public Error {
 public:
  using Error::Error;
};

inline void verify(bool condition, const std::string& what) {
  if (!condition) throw VerificationError(what);
}

}  // namespace qzf
