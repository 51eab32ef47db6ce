#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparsefac {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class CtxMismatch : public Error {
 public:
  CtxMismatch() : Error("operands belong to different fields") {}
};

class DivByZero : public Error {
 public:
  DivByZero() : Error("division by zero") {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class ZeroDegree : public Error {
 public:
  ZeroDegree() : Error("polynomial does not depend on the eliminated variable") {}
};

class EmptyVector : public Error {
 public:
  EmptyVector() : Error("empty multiplicity vector") {}
};

class EmptySupport : public Error {
 public:
  EmptySupport() : Error("empty support") {}
};

class DegreeZero : public Error {
 public:
  DegreeZero() : Error("resultant needs both polynomials of positive degree") {}
};

class NotMonic : public Error {
 public:
  NotMonic() : Error("polynomial is not monic in y") {}
};

class NotCoprime : public Error {
 public:
  NotCoprime() : Error("Hensel lifting needs coprime starting factors") {}
};

class GuessInvalid : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NoFactorizationFound : public Error {
 public:
  using Error::Error;
};

/// Raised when a construction needs more distinct field elements than the
/// field has. `required()` is the smallest field size that would work.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(std::uint64_t required, const std::string& what)
      : Error(what + " (needs a field with at least " + std::to_string(required) +
              " elements)"),
        required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace sparsefac
