#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace zbound {

enum class ErrorCode {
  DegreeTooSmall,
  ZeroLeadingCoefficient,
  DegenerateAllZeroTail,
  SyntaxError,
  EllTooLargeForBinomialPath,
  NoSignChange,
  MaxIterationsExceeded,
  NoRealRoot,
  NotConverged,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; `code()` tells callers which
// contract was violated. Parse errors also carry the byte offset.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace zbound
