#include "scrimkit/budget.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "scrimkit/error.hpp"

namespace scrimkit {

Budget Budget::from_env() {
  Budget budget;
  const char* raw = std::getenv("SCRIMKIT_BUDGET");
  if (raw == nullptr || *raw == '\0') return budget;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || value == 0) {
    throw Error(Errc::InvalidArgument, std::string("SCRIMKIT_BUDGET is not a positive integer: ") + raw);
  }
  budget.max_enumeration = value;
  budget.max_oracle_bits = static_cast<unsigned>(std::bit_width(value) - 1);
  return budget;
}

}  // namespace scrimkit
