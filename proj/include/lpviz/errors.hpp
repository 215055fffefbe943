#pragma once

#include <stdexcept>
#include <string>

namespace lpviz {

/// Base class for user-facing failures (bad input, unsupported requests).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails. Never the user's fault.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularPivot : public Error {
 public:
  using Error::Error;
};

class EmptyRegion : public Error {
 public:
  EmptyRegion() : Error("feasible region is empty") {}
};

class DimensionUnsupported : public Error {
 public:
  explicit DimensionUnsupported(int n)
      : Error("geometry requires 2 or 3 decision variables, got " + std::to_string(n)) {}
};

class NotFractional : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

class BundleMissing : public Error {
 public:
  BundleMissing() : Error("no UI bundle was provided and none is vendored") {}
};

/// Malformed scene document. `path()` is a JSON path such as "$.polytope.vertices[3].id".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace lpviz
