#include "semideg/error.hpp"

namespace semideg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kLoop: return "Loop";
    case ErrorCode::kDigon: return "Digon";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kVertexNotInPartition: return "VertexNotInPartition";
    case ErrorCode::kBalancedPartition: return "BalancedPartition";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kTerminalClash: return "TerminalClash";
    case ErrorCode::kDuplicateVertices: return "DuplicateVertices";
    case ErrorCode::kUnbalanced: return "Unbalanced";
    case ErrorCode::kDegreeFloorViolated: return "DegreeFloorViolated";
    case ErrorCode::kMergeFailed: return "MergeFailed";
    case ErrorCode::kEndpointClassMismatch: return "EndpointClassMismatch";
    case ErrorCode::kPathsIntersect: return "PathsIntersect";
    case ErrorCode::kArcMissing: return "ArcMissing";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kPatternUnsatisfied: return "PatternUnsatisfied";
    case ErrorCode::kEmptyClass: return "EmptyClass";
    case ErrorCode::kImbalanceTooLarge: return "ImbalanceTooLarge";
    case ErrorCode::kSupplyExhausted: return "SupplyExhausted";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace semideg
