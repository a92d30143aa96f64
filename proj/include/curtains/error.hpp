#pragma once

#include <stdexcept>
#include <string>

namespace curtains {

// Base for every error raised by the library. Validation failures are
// reported through ValidationReport instead; exceptions signal broken
// preconditions or failed constructions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BraidError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class ChartError : public Error {
 public:
  using Error::Error;
};

class CurtainError : public Error {
 public:
  using Error::Error;
};

class BuildError : public Error {
 public:
  using Error::Error;
};

class TransitionError : public Error {
 public:
  using Error::Error;
};

class CoverError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace curtains
