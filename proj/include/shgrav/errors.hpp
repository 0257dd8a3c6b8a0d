#pragma once

#include <stdexcept>
#include <string>

namespace shgrav {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a numeric routine (out-of-range degree, |u| > 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Latitude too close to +-pi/2 for the tan(phi)-based derivative recursion.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Field or mascon query at a singular point.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Shape model violates a structural invariant.
class MeshError : public Error {
 public:
  enum class Kind {
    kIndexOutOfRange,
    kRepeatedVertex,
    kOpenSurface,
    kInconsistentWinding,
    kNonPositiveVolume,
    kParse,
  };

  MeshError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Fatal numeric failure while building or using a gravity model
/// (non-positive mass, non-finite accumulation, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace shgrav
