#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace scrimkit {

/// Exact integers for code counts and extension-field exponents.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace scrimkit
