#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twb {

enum class ErrorCode {
  InvalidInput,
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderLimitExceeded,
  UnknownName,
  NotGenerating,
  NotAHomomorphism,
  SearchLimitExceeded,
  LiftFailure,
  InfiniteClasses,
  IncompatibleTwist,
  InfiniteEntry,
  InternalDefect,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the witnessing elements where there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twb
