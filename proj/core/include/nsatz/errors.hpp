#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsatz {

/// Base class of all library errors. Every error carries a stable,
/// machine-readable kind tag; the CLI prints "error:<kind>: <message>".
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

/// Malformed input text. `position` is a 0-based byte offset.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("SyntaxError", message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class UnknownVariable : public Error {
public:
  explicit UnknownVariable(const std::string& message) : Error("UnknownVariable", message) {}
};

class NegativeExponent : public Error {
public:
  explicit NegativeExponent(const std::string& message) : Error("NegativeExponent", message) {}
};

class ZeroPolynomial : public Error {
public:
  explicit ZeroPolynomial(const std::string& message) : Error("ZeroPolynomial", message) {}
};

class DivisionByZero : public Error {
public:
  explicit DivisionByZero(const std::string& message) : Error("DivisionByZero", message) {}
};

/// Generic precondition violation with no dedicated kind of its own.
class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& message) : Error("InvalidArgument", message) {}
};

class PartialPoint : public Error {
public:
  explicit PartialPoint(const std::string& message) : Error("PartialPoint", message) {}
};

class EmptyPointSet : public Error {
public:
  explicit EmptyPointSet(const std::string& message) : Error("EmptyPointSet", message) {}
};

class NotASuperset : public Error {
public:
  explicit NotASuperset(const std::string& message) : Error("NotASuperset", message) {}
};

class NotUnitContraction : public Error {
public:
  explicit NotUnitContraction(const std::string& message) : Error("NotUnitContraction", message) {}
};

class NotMaximal : public Error {
public:
  explicit NotMaximal(const std::string& message) : Error("NotMaximal", message) {}
};

/// Raised by strong Nullstellensatz checking when the instance cannot be
/// decided by rational point enumeration. `reason()` is one of
/// "Empty", "NonRational", "NotZeroDimensional".
class NotCheckable : public Error {
public:
  NotCheckable(std::string reason, const std::string& message)
      : Error("NotCheckable", message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

private:
  std::string reason_;
};

class NonSplit : public Error {
public:
  explicit NonSplit(const std::string& message) : Error("NonSplit", message) {}
};

class MissingRootVariable : public Error {
public:
  explicit MissingRootVariable(const std::string& message) : Error("MissingRootVariable", message) {}
};

class InvalidCertificate : public Error {
public:
  explicit InvalidCertificate(const std::string& message) : Error("InvalidCertificate", message) {}
};

}  // namespace nsatz
