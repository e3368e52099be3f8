#pragma once

#include <stdexcept>
#include <string>

namespace kwall {

/// Base class of every error raised by the library. `kind()` is a short
/// machine-readable tag that the CLI copies into its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Invalid user input: malformed models, non-narrow indices, bad ranges.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation", message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& message)
      : Error("division_by_zero", message) {}
};

/// A denominator factor outside {x, cyclotomic blocks} was met where the
/// loop space requires poles only at 0, roots of unity and infinity.
class MalformedPoleError : public Error {
 public:
  explicit MalformedPoleError(const std::string& message)
      : Error("malformed", message) {}
};

/// The tail recursion hit an inconsistent or singular linear system.
class InsolvableError : public Error {
 public:
  InsolvableError(const std::string& message, std::string monomial)
      : Error("insolvable", message), monomial_(std::move(monomial)) {}
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

/// A principal part needs a pole order above J_max or a block above N_max.
class TruncationOverflow : public Error {
 public:
  TruncationOverflow(const std::string& message, std::string monomial)
      : Error("truncation_overflow", message), monomial_(std::move(monomial)) {}
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

}  // namespace kwall
