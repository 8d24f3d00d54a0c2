#pragma once

#include <stdexcept>
#include <string>

namespace mlsn {

enum class ErrorCode {
  validation,
  duplicate_edge,
  normalization,
  not_found,
  degenerate_network,
  contract_violation,
  parse,
  range,
  degenerate_fit,
  insufficient_data,
  ingestion,
  invalid_argument,
  io,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; the code is what the
// C API and the CLI map to status values and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlsn
