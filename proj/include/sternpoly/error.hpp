#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sternpoly {

enum class ErrorKind {
  NotDivisible,
  BadModulus,
  ZeroPolynomial,
  UndefinedDegree,
  EvenIndex,
  BoundTooLarge,
  TooFewSolutions,
  PreconditionViolated,
  OutOfDomain,
  ParseError,
  CheckpointMismatch,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (CLI exit
// codes, Python exceptions) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sternpoly
