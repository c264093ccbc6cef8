#pragma once

#include <stdexcept>
#include <string>

namespace stabscope {

// Requested problem size exceeds a dense-memory or enumeration guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical postcondition failed (non-real expectation, eigensolver
// failure, LP infeasibility, broken normalization).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input (text, JSON, CSV).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

inline void guard(bool condition, const std::string& message) {
  if (!condition) throw GuardError(message);
}

}  // namespace stabscope
