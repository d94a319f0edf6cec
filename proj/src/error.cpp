#include "opetokit/error.hpp"

namespace opetokit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::ArityBoundExceeded: return "ArityBoundExceeded";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::DanglingId: return "DanglingId";
    case ErrorCode::NicheMismatch: return "NicheMismatch";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidBiasing: return "InvalidBiasing";
    case ErrorCode::NoUniversalOccupant: return "NoUniversalOccupant";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorCode::PathMismatch: return "PathMismatch";
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownKind: return "UnknownKind";
  }
  return "Unknown";
}

}  // namespace opetokit
