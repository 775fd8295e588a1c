#pragma once

#include <stdexcept>
#include <string>

namespace typeec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A nonzero element turned out not to be invertible. Raised lazily when a
/// level was adjoined with a reducible polynomial (dynamic evaluation).
class ZeroDivisor : public Error {
 public:
  explicit ZeroDivisor(const std::string& level)
      : Error("zero divisor in level '" + level + "': adjoined polynomial is reducible") {}
};

/// Operands come from incompatible towers (neither level contains the other).
class TowerMismatch : public Error {
 public:
  TowerMismatch() : Error("field elements belong to incompatible towers") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DegenerateAddition : public Error {
 public:
  DegenerateAddition() : Error("both addition branches vanish") {}
};

class DependentDerivatives : public Error {
 public:
  DependentDerivatives() : Error("left derivatives are linearly dependent") {}
};

class SingularMap : public Error {
 public:
  SingularMap() : Error("linear map is not invertible") {}
};

class UnexpectedDimension : public Error {
 public:
  UnexpectedDimension(std::size_t got, std::size_t want)
      : Error("relation space has dimension " + std::to_string(got) + ", expected " +
              std::to_string(want)) {}
};

class FiberNotPoint : public Error {
 public:
  explicit FiberNotPoint(std::size_t dim)
      : Error("fiber nullspace has dimension " + std::to_string(dim) + ", expected 1") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public ParseError {
 public:
  UnknownSymbol(const std::string& name, std::size_t position)
      : ParseError("unknown symbol '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace typeec
