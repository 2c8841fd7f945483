#include "pcgc/error.hpp"

namespace pcgc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotCompleteLattice: return "NotCompleteLattice";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::NotBlockPreserving: return "NotBlockPreserving";
    case ErrorKind::NotSound: return "NotSound";
    case ErrorKind::NotGI: return "NotGI";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UseBeforeAssign: return "UseBeforeAssign";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Error";
}

}  // namespace pcgc
