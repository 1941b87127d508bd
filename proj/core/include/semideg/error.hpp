#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semideg {

enum class ErrorCode {
  kLoop,
  kDigon,
  kOutOfRange,
  kDuplicateArc,
  kBadParameter,
  kBudgetExceeded,
  kParseError,
  kTooLarge,
  kVertexNotInPartition,
  kBalancedPartition,
  kEmptySide,
  kBadPartition,
  kTerminalClash,
  kDuplicateVertices,
  kUnbalanced,
  kDegreeFloorViolated,
  kMergeFailed,
  kEndpointClassMismatch,
  kPathsIntersect,
  kArcMissing,
  kSameVertex,
  kPatternUnsatisfied,
  kEmptyClass,
  kImbalanceTooLarge,
  kSupplyExhausted,
  kBadSpec,
  kIoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semideg
