#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cca {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the byte offset of the offending token.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A computation exceeded a configured budget (pair reductions, basis size,
// stabilization window, chain length). The message names the budget.
struct ResourceError : Error {
  using Error::Error;
};

// An operation that needs a finite dimensional quotient was handed an ideal
// whose quotient is not finite dimensional.
struct NotArtinianError : Error {
  using Error::Error;
};

// Mismatched rings, invalid field parameters, unsupported dimensions and
// similar caller mistakes.
struct DomainError : Error {
  using Error::Error;
};

// A randomized certification loop exhausted its retry budget.
struct CertificationError : Error {
  using Error::Error;
};

}  // namespace cca
