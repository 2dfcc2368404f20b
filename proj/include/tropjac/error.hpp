#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropjac {

enum class ErrorCode {
  InvalidInput,
  DisconnectedGraph,
  NonPositiveLength,
  EmptyAfterPruning,
  DOutOfRange,
  KOutOfRange,
  GOutOfRange,
  SideMismatch,
  GenusMismatch,
  InhomogeneousClass,
  NonZeroDegreeClass,
  NotPositiveDefinite,
  NonIntegralForm,
  GenusTooLarge,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::EmptyAfterPruning: return "EmptyAfterPruning";
    case ErrorCode::DOutOfRange: return "DOutOfRange";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::GOutOfRange: return "GOutOfRange";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::InhomogeneousClass: return "InhomogeneousClass";
    case ErrorCode::NonZeroDegreeClass: return "NonZeroDegreeClass";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NonIntegralForm: return "NonIntegralForm";
    case ErrorCode::GenusTooLarge: return "GenusTooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropjac
