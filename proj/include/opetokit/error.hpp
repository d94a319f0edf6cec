#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opetokit {

enum class ErrorCode {
  FrameMismatch,
  ArityBoundExceeded,
  MissingEntry,
  DanglingId,
  NicheMismatch,
  ArityError,
  InvalidInput,
  InvalidBiasing,
  NoUniversalOccupant,
  NoSolution,
  NonUniqueSolution,
  PathMismatch,
  MissingComposite,
  ParseError,
  UnknownKind,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opetokit
