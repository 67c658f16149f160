#pragma once

#include <stdexcept>
#include <string>

namespace ugfpc {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  DependentBasis,
  Parse,
  Io,
  Domain,
  Budget,
  WrongPhase,
  IllegalMove,
  NotFound,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the core library carries one of the kinds above;
/// the C API maps them onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ugfpc
