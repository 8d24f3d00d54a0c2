#include "mlsn/error.hpp"

namespace mlsn {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::validation: return "validation";
    case ErrorCode::duplicate_edge: return "duplicate_edge";
    case ErrorCode::normalization: return "normalization";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::degenerate_network: return "degenerate_network";
    case ErrorCode::contract_violation: return "contract_violation";
    case ErrorCode::parse: return "parse";
    case ErrorCode::range: return "range";
    case ErrorCode::degenerate_fit: return "degenerate_fit";
    case ErrorCode::insufficient_data: return "insufficient_data";
    case ErrorCode::ingestion: return "ingestion";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace mlsn
