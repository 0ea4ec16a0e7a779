#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiletopo {

enum class ErrorKind {
  NotExpanding,
  DegenerateBasis,
  BadDeterminant,
  OutOfRange,
  LengthMismatch,
  WrongRegime,
  NotIrreducible,
  NoConsistentOrdering,
  NonPeriodicWalk,
  CertificateFailure,
  ChainViolation,
  IdentityFailure,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class TileError : public std::runtime_error {
 public:
  TileError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures of a check the theory guarantees (as opposed to bad
  /// input or a parameter outside the supported regime).
  bool is_verification_failure() const noexcept {
    return kind_ == ErrorKind::CertificateFailure ||
           kind_ == ErrorKind::ChainViolation ||
           kind_ == ErrorKind::IdentityFailure ||
           kind_ == ErrorKind::NoConsistentOrdering ||
           kind_ == ErrorKind::NotIrreducible;
  }

 private:
  ErrorKind kind_;
};

}  // namespace tiletopo
