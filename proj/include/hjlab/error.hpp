#pragma once

#include <stdexcept>
#include <string>

namespace hjlab {

enum class ErrorCode {
  NonFinite,
  IndexOutOfRange,
  CFLViolation,
  Blowup,
  HorizonExceeded,
  NotNormalized,
  NotMonotone,
  HypothesisUnmet,
  GridMismatch,
  ConeLeavesCell,
  BadSpec,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CFLViolation: return "CFLViolation";
    case ErrorCode::Blowup: return "Blowup";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::ConeLeavesCell: return "ConeLeavesCell";
    case ErrorCode::BadSpec: return "BadSpec";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hjlab
