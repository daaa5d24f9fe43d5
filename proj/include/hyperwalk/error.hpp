#pragma once

#include <stdexcept>
#include <string>

namespace hyperwalk {

/// Stable error categories. The numeric value doubles as the CLI exit code
/// family (see cli.hpp).
enum class ErrorCode {
  Parse,
  Validation,
  KeyMismatch,
  InvalidSchedule,
  IsolatedVertex,
  Domain,
  Overflow,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(ErrorCode::Parse, location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::Validation, what) {}
};

class KeyMismatch : public Error {
 public:
  explicit KeyMismatch(const std::string& what)
      : Error(ErrorCode::KeyMismatch, what) {}
};

class InvalidSchedule : public Error {
 public:
  explicit InvalidSchedule(const std::string& what)
      : Error(ErrorCode::InvalidSchedule, what) {}
};

class IsolatedVertex : public Error {
 public:
  explicit IsolatedVertex(int vertex)
      : Error(ErrorCode::IsolatedVertex,
              "pattern vertex " + std::to_string(vertex) +
                  " lies in no triple"),
        vertex_(vertex) {}

  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::Domain, what) {}
};

/// Thrown by the fixed-width Rational when an intermediate does not fit.
class RationalOverflow : public Error {
 public:
  RationalOverflow() : Error(ErrorCode::Overflow, "rational overflow") {}
};

}  // namespace hyperwalk
