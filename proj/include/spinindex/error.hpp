#pragma once

#include <stdexcept>
#include <string>

namespace spinindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Arithmetic between two quadratic extensions with different radicands.
class TowerMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix that is not in the group it claims to belong to.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quaternion that is not one of the 120 icosians.
class MembershipError : public Error {
 public:
  using Error::Error;
};

class WordDecompositionError : public Error {
 public:
  using Error::Error;
};

class NotExtendable : public Error {
 public:
  using Error::Error;
};

class FieldObstruction : public Error {
 public:
  using Error::Error;
};

class NonIsolatedFixedPoint : public Error {
 public:
  using Error::Error;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Character table and spin data disagree (non-integral multiplicities,
/// recorded values contradicting computed ones, malformed data file).
class DataInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinindex
