#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pbw {

enum class ErrorCode {
  ConfigError,
  AntisymmetryViolation,
  JacobiViolation,
  TruncationTooSmall,
  TruncationOverflow,
  TamenessRequired,
};

const char* error_code_name(ErrorCode code);

class PbwError : public std::runtime_error {
 public:
  PbwError(ErrorCode code, const std::string& message, std::vector<std::string> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}
  ErrorCode code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::string> witness_;
};

}  // namespace pbw
