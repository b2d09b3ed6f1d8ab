#pragma once

// Text form of polynomials over F_{q^2}.
//
//   poly  := "0" | term (" + " term)*          terms by descending degree
//   term  := "(" elem ")" ["*" mono] | mono    coefficient 1 is omitted on x^k, k >= 1
//   mono  := "x" ["^" k]
//   elem  := "0" | eterm ("+" eterm)*          w-terms by descending degree
//   eterm := c ["*" wmono] | wmono
//   wmono := "w" ["^" k]
//
// Example: "x^3 + (w)*x + (w+1)". The parser ignores whitespace, so the
// rendered form round-trips exactly.

#include <string>
#include <string_view>

#include "scrimkit/gf.hpp"

namespace scrimkit {

std::string format_poly(const FieldSpec& field, const FPoly& f);
FPoly parse_poly(const FieldSpec& field, std::string_view text);
Gf parse_element(const FieldSpec& field, std::string_view text);

}  // namespace scrimkit
