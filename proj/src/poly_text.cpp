#include "scrimkit/poly_text.hpp"

#include <cctype>
#include <string>

namespace scrimkit {

std::string format_poly(const FieldSpec& field, const FPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = f.coeffs.size(); k-- > 0;) {
    const Gf c = f.coeffs[k];
    if (field.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    const bool omit = (k > 0 && c == field.one());
    if (!omit) {
      out += "(" + field.format(c) + ")";
      if (k > 0) out += "*";
    }
    if (k > 0) out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const FieldSpec& field, std::string_view text) : field_(field) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }
  }

  FPoly poly() {
    if (src_ == "0") return {};
    std::vector<Gf> coeffs;
    do {
      auto [c, k] = term();
      if (coeffs.size() <= k) coeffs.resize(k + 1, field_.zero());
      coeffs[k] = field_.add(coeffs[k], c);
    } while (accept('+'));
    finish();
    return poly::make(field_, std::move(coeffs));
  }

  Gf element_only() {
    Gf c = element();
    finish();
    return c;
  }

 private:
  std::pair<Gf, std::size_t> term() {
    if (accept('(')) {
      Gf c = element();
      expect(')');
      if (accept('*')) return {c, monomial('x')};
      return {c, 0};
    }
    return {field_.one(), monomial('x')};
  }

  std::size_t monomial(char var) {
    expect(var);
    if (accept('^')) return static_cast<std::size_t>(integer());
    return 1;
  }

  Gf element() {
    Gf acc = field_.zero();
    do {
      acc = field_.add(acc, element_term());
    } while (accept('+'));
    return acc;
  }

  Gf element_term() {
    u64 c = 1;
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      c = integer();
      if (!accept('*')) return field_.from_int(c);
    }
    const std::size_t k = monomial('w');
    if (k >= field_.degree()) fail("power of w beyond the field degree");
    std::vector<u64> digits(k + 1, 0);
    digits[k] = c % field_.p();
    return field_.from_coeffs(digits);
  }

  u64 integer() {
    const std::size_t start = pos_;
    u64 v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<u64>(src_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  bool accept(char ch) {
    if (pos_ < src_.size() && src_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  void finish() {
    if (pos_ != src_.size()) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" + src_ + "\"");
  }

  const FieldSpec& field_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

FPoly parse_poly(const FieldSpec& field, std::string_view text) { return Parser(field, text).poly(); }

Gf parse_element(const FieldSpec& field, std::string_view text) {
  return Parser(field, text).element_only();
}

}  // namespace scrimkit
