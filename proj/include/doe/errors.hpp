#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace doe {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "bad algebra" can catch this and inspect
/// the concrete type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("inverse of zero") {}
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DivisorNotInvertible : public Error {
 public:
  using Error::Error;
};

/// Document structure errors: missing keys, wrong types.
class MalformedDocument : public Error {
 public:
  using Error::Error;
};

class ArityError : public MalformedDocument {
 public:
  using MalformedDocument::MalformedDocument;
};

class NotScalar : public MalformedDocument {
 public:
  using MalformedDocument::MalformedDocument;
};

class UnvalidatedSpec : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class SingularBasis : public Error {
 public:
  SingularBasis() : Error("basis change matrix is singular") {}
};

class ZeroB : public Error {
 public:
  ZeroB() : Error("B2 example requires b != 0") {}
};

/// Raised when the quadratic relation among new generators leaves the
/// double-extension shape. `z2_squared` holds the offending coefficient
/// (rendered canonically) when the degree-two words are independent.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::optional<std::string> z2_squared)
      : Error(what), z2_squared_(std::move(z2_squared)) {}
  const std::optional<std::string>& z2_squared_coefficient() const {
    return z2_squared_;
  }

 private:
  std::optional<std::string> z2_squared_;
};

}  // namespace doe
