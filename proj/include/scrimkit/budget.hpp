#pragma once

#include <cstdint>

namespace scrimkit {

/// Size gates for enumeration and the brute-force oracles.
struct Budget {
  /// Maximum number of codes an enumeration may produce.
  std::uint64_t max_enumeration = std::uint64_t{1} << 20;
  /// The chain-ring oracle runs while |R|^n <= 2^max_oracle_bits.
  unsigned max_oracle_bits = 128;
  /// Maximum length n for the row-space intersection oracle over F_{q^2}.
  std::uint64_t max_intersection_length = 64;

  /// Defaults, with SCRIMKIT_BUDGET = N (a positive integer) setting
  /// max_enumeration = N and max_oracle_bits = floor(log2 N).
  static Budget from_env();
};

}  // namespace scrimkit
