#include "balfam/error.hpp"

namespace balfam {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed input";
    case ErrorKind::ElementOutOfRange: return "element out of range";
    case ErrorKind::GroundSetTooLarge: return "ground set too large";
    case ErrorKind::GroundSetTooSmall: return "ground set too small";
    case ErrorKind::DuplicateMember: return "duplicate member";
    case ErrorKind::EmptyFamily: return "empty family";
    case ErrorKind::EmptyIndexSet: return "empty index set";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::InvalidUniformity: return "invalid uniformity";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::OneSidedRelation: return "one-sided relation";
    case ErrorKind::NotUniform: return "not uniform";
    case ErrorKind::InsufficientFamily: return "insufficient family";
    case ErrorKind::EmptyUniformity: return "empty uniformity";
    case ErrorKind::EmptySetMember: return "empty set member";
    case ErrorKind::FamilyTooLarge: return "family too large";
  }
  return "unknown error";
}

}  // namespace balfam
