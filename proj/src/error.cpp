#include "scrimkit/error.hpp"

namespace scrimkit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::ZeroHasNoOrder: return "ZeroHasNoOrder";
    case Errc::CharacteristicDividesN: return "CharacteristicDividesN";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::EvenInput: return "EvenInput";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NilpotencyTooSmall: return "NilpotencyTooSmall";
    case Errc::LiftMismatch: return "LiftMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_precondition(Errc code) {
  return code != Errc::LiftMismatch && code != Errc::Internal;
}

}  // namespace scrimkit
