#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cumskew {

enum class ErrorCode {
  EmptyOrTooSmall,
  NonFiniteValue,
  ConstantSample,
  CountTooLarge,
  InvalidParameter,
  FileNotFound,
  ColumnNotFound,
  ParseError,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyOrTooSmall: return "EmptyOrTooSmall";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::ConstantSample: return "ConstantSample";
    case ErrorCode::CountTooLarge: return "CountTooLarge";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ColumnNotFound: return "ColumnNotFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library. `location` carries the offending
// element index (validation) or 1-based line number (CSV parsing).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> location = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        location_(location) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> location_;
};

}  // namespace cumskew
