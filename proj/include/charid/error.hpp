#pragma once

#include <stdexcept>
#include <string>

namespace charid {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain = 2,
  Dimension = 3,
  Degenerate = 4,
  Internal = 5,
  Convention = 6,
  Numeric = 7,
};

/// Base of every exception thrown by the library. The C API maps `code()`
/// onto `charid_status`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};
struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error(ErrorCode::Dimension, w) {}
};
struct DegenerateError : Error {
  explicit DegenerateError(const std::string& w) : Error(ErrorCode::Degenerate, w) {}
};
/// A closed form disagreed with the basis it was evaluated on.
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(ErrorCode::Internal, w) {}
};
struct ConventionError : Error {
  explicit ConventionError(const std::string& w) : Error(ErrorCode::Convention, w) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorCode::Numeric, w) {}
};

}  // namespace charid
