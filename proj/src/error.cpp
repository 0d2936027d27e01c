#include "twistforge/error.hpp"

namespace twistforge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::InvalidClass: return "InvalidClass";
    case ErrorKind::NotANonResidue: return "NotANonResidue";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::TwoTorsionAmbient: return "TwoTorsionAmbient";
    case ErrorKind::InvalidSerial: return "InvalidSerial";
    case ErrorKind::NoTarget: return "NoTarget";
    case ErrorKind::Exhausted: return "Exhausted";
    case ErrorKind::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

bool Error::is_validation() const noexcept {
  switch (kind_) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidClass:
    case ErrorKind::NotANonResidue:
    case ErrorKind::SingularCurve:
    case ErrorKind::InvalidSerial:
    case ErrorKind::OutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace twistforge
