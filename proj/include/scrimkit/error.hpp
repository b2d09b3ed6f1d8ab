#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scrimkit {

enum class Errc {
  NonPrimeCharacteristic,
  SizeLimitExceeded,
  ZeroHasNoOrder,
  CharacteristicDividesN,
  NotCoprime,
  DivisionByZeroPoly,
  NonUnitLeadingCoefficient,
  NonUnitConstantTerm,
  EvenInput,
  OracleTooLarge,
  EnumerationTooLarge,
  NilpotencyTooSmall,
  LiftMismatch,
  Unsupported,
  ParseError,
  InvalidArgument,
  Internal,
};

std::string_view errc_name(Errc code);

// Precondition failures are reported to the caller; LiftMismatch and Internal
// signal a broken invariant inside the library.
bool is_precondition(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace scrimkit
