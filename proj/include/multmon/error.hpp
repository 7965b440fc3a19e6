#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multmon {

/// Failure categories. The numeric values are the CLI exit codes.
enum class ErrorKind : int {
  InvalidInput = 1,
  HypothesisViolation = 2,
  Unsupported = 3,
  ResourceLimit = 4,
  InternalConsistency = 5,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

/// A precondition of a closed-form formula does not hold for the input.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what)
      : Error(ErrorKind::HypothesisViolation, what) {}
};

/// The computation is well defined but no algorithm for it is provided.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what)
      : Error(ErrorKind::Unsupported, what) {}
};

class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error(ErrorKind::ResourceLimit, what) {}
};

/// Two routes that must agree did not, or an exact identity failed.
/// Always an engine bug, never a property of valid input.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorKind::InternalConsistency, what) {}
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what)
      : Error(ErrorKind::InvalidInput, what) {}
};

}  // namespace multmon
