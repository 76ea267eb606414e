#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bolloop {

enum class ErrorCode {
  DegreeMismatch,
  CapExceeded,
  NotSubgroup,
  NotExact,
  NotFaithful,
  NotInGroup,
  UnsupportedDimension,
  InvalidParameter,
  SizeGate,
  NotNormal,
  NotNormalSocle,
  NotALoop,
  FolderViolation,
  MalformedInput,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bolloop
