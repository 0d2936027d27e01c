#pragma once

#include <stdexcept>
#include <string>

namespace twistforge {

enum class ErrorKind {
  InvalidArgument,
  ZeroInverse,
  InvalidClass,
  NotANonResidue,
  SingularCurve,
  IndexOutOfRange,
  ParityMismatch,
  TwoTorsionAmbient,
  InvalidSerial,
  NoTarget,
  Exhausted,
  OutOfRange,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by bad caller input rather than internal faults.
  bool is_validation() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace twistforge
