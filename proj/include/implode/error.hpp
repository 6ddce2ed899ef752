#pragma once

#include <stdexcept>
#include <string>

namespace implode {

// Exit-code families used by the command line front end.
enum class ErrorKind { Precondition = 2, Schema = 3, Numerical = 4 };

// Base error: a human-readable message plus a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  int exit_status() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
  std::string code_;
};

class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& message)
      : Error(ErrorKind::Precondition, std::move(code), message) {}
};

class SchemaError : public Error {
 public:
  SchemaError(std::string code, const std::string& message)
      : Error(ErrorKind::Schema, std::move(code), message) {}
};

class NumericalError : public Error {
 public:
  NumericalError(std::string code, const std::string& message)
      : Error(ErrorKind::Numerical, std::move(code), message) {}
};

}  // namespace implode
