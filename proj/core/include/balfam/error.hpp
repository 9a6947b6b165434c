#pragma once

#include <stdexcept>
#include <string>

namespace balfam {

// Failure classes surfaced by the library. The CLI maps every one of these
// to exit code 2 (input or usage error).
enum class ErrorKind {
  MalformedInput,
  ElementOutOfRange,
  GroundSetTooLarge,
  GroundSetTooSmall,
  DuplicateMember,
  EmptyFamily,
  EmptyIndexSet,
  IndexOutOfRange,
  InvalidUniformity,
  DimensionMismatch,
  OneSidedRelation,
  NotUniform,
  InsufficientFamily,
  EmptyUniformity,
  EmptySetMember,
  FamilyTooLarge,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace balfam
