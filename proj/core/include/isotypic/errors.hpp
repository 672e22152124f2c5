#pragma once

#include <stdexcept>
#include <string>

namespace isotypic {

/// Broad failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  validation = 2,  ///< malformed or inconsistent input
  invariant = 3,   ///< a mathematical identity failed to hold
  resource = 4,    ///< a configured size bound was exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorKind::invariant, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

}  // namespace isotypic
