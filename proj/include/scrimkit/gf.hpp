#pragma once

// The tower F_p ⊂ F_{q^2} ⊂ F_{(q^2)^m}.
//
// F_{q^2} (q = p^e) is F_p[w]/(M(w)) with M the lexicographically least monic
// irreducible of degree 2e. Extensions are built over F_{q^2} directly as
// F_{q^2}[y]/(N(y)) with N the lex-least monic irreducible of degree m, so the
// embedding of F_{q^2} is the inclusion of constants.
//
// Lexicographic order on coefficient tuples compares the constant term first.

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "scrimkit/bigint.hpp"
#include "scrimkit/poly.hpp"

namespace scrimkit {

using u64 = std::uint64_t;

class PrimeField {
 public:
  using Elem = u64;

  explicit PrimeField(u64 p) : p_(p) {}

  u64 characteristic() const { return p_; }
  u64 size() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(u64 v) const { return v % p_; }
  Elem add(Elem a, Elem b) const { return a >= p_ - b ? a - (p_ - b) : a + b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return nt::mulmod(a, b, p_); }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const { return a != 0; }
  Elem conj(Elem a) const { return a; }

 private:
  u64 p_;
};

using FpPoly = Poly<PrimeField>;

/// An element of F_{q^2}: code = sum c_i p^i over the power-basis coordinates.
struct Gf {
  u64 code = 0;
  auto operator<=>(const Gf&) const = default;
};

/// F_{q^2} together with its arithmetic. Immutable; copies share tables.
class FieldSpec {
 public:
  using Elem = Gf;
  static constexpr u64 kDefaultSizeLimit = std::numeric_limits<u64>::max();

  /// build_field: F_{p^(2e)}. Throws NonPrimeCharacteristic, SizeLimitExceeded.
  static FieldSpec build(u64 p, unsigned e, u64 size_limit = kDefaultSizeLimit);
  /// F_{q^2} for a prime power q.
  static FieldSpec for_q(u64 q);

  u64 p() const;
  unsigned e() const;
  u64 q() const;
  u64 size() const;
  unsigned degree() const { return 2 * e(); }
  const FpPoly& modulus() const;
  const PrimeField& prime_field() const;

  Elem zero() const { return Gf{0}; }
  Elem one() const { return Gf{1}; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, u64 k) const;
  bool is_zero(Elem a) const { return a.code == 0; }
  bool is_unit(Elem a) const { return a.code != 0; }
  /// x -> x^q
  Elem conj(Elem a) const { return pow(a, q()); }
  bool in_subfield_q(Elem a) const { return conj(a) == a; }

  /// The class of w, a root of the modulus.
  Elem generator() const { return Gf{p()}; }
  Elem from_int(u64 v) const { return Gf{v % p()}; }
  Elem from_coeffs(std::span<const u64> coeffs) const;
  std::vector<u64> coeffs(Elem a) const;

  /// Multiplicative order; throws ZeroHasNoOrder.
  u64 element_order(Elem a) const;

  u64 lex_rank(Elem a) const;
  Elem lex_unrank(u64 rank) const;
  bool lex_less(Elem a, Elem b) const { return lex_rank(a) < lex_rank(b); }

  /// "2*w^2+w+1"; "0" for zero.
  std::string format(Elem a) const;

  bool operator==(const FieldSpec& other) const;

 private:
  struct Data;
  explicit FieldSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  Elem mul_generic(Elem a, Elem b) const;
  std::shared_ptr<const Data> d_;
};

using FPoly = Poly<FieldSpec>;

/// Lex-least monic irreducible of the given degree over a small field,
/// scanning coefficient tuples (c_0, ..., c_{d-1}) with c_0 most significant.
/// unrank(r) is the field element of lex rank r.
template <SmallFiniteField F, class Unrank>
Poly<F> lex_least_irreducible(const F& field, unsigned degree, Unrank unrank);

/// F_{q^2}[y]/(N(y)), elements stored as m coordinates over F_{q^2}.
class ExtensionField {
 public:
  using Elem = std::vector<Gf>;

  ExtensionField(FieldSpec base, FPoly modulus);
  /// Extension of degree m by the lex-least monic irreducible.
  static ExtensionField lex_least(const FieldSpec& base, unsigned m);

  const FieldSpec& base() const { return base_; }
  const FPoly& modulus() const { return modulus_; }
  unsigned degree() const { return m_; }
  BigInt size() const;

  Elem zero() const { return Elem(m_, Gf{0}); }
  Elem one() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const BigInt& k) const;
  Elem pow(const Elem& a, u64 k) const { return pow(a, BigInt(k)); }
  bool is_zero(const Elem& a) const;
  bool is_unit(const Elem& a) const { return !is_zero(a); }
  /// x -> x^q
  Elem conj(const Elem& a) const { return pow(a, base_.q()); }

  Elem embed(Gf a) const;
  /// True iff a lies in the image of F_{q^2}.
  bool in_base(const Elem& a) const;

  /// Requires size - 1 < 2^64; throws SizeLimitExceeded otherwise.
  u64 element_order(const Elem& a) const;

  Elem lex_unrank(const std::vector<u64>& ranks) const;

 private:
  FieldSpec base_;
  FPoly modulus_;
  unsigned m_;
};

struct ExtensionCtx {
  FieldSpec base;
  unsigned m = 1;
  ExtensionField field;
  ExtensionField::Elem embed_image;  // image of w
};

struct PrimitiveRoot {
  ExtensionCtx ctx;
  ExtensionField::Elem alpha;
  u64 n = 1;
};

/// Degree cap for on-demand extensions.
inline constexpr unsigned kDefaultMaxExtensionDegree = 512;

/// A primitive n-th root of unity in F_{(q^2)^m}, m = ord_n(q^2).
///
/// alpha = beta^((|F|-1)/n) for the lex-least beta making that power of exact
/// order n. Throws CharacteristicDividesN, SizeLimitExceeded.
PrimitiveRoot primitive_nth_root(const FieldSpec& field, u64 n,
                                 unsigned max_degree = kDefaultMaxExtensionDegree);

// ---------------------------------------------------------------------------

template <SmallFiniteField F, class Unrank>
Poly<F> lex_least_irreducible(const F& field, unsigned degree, Unrank unrank) {
  const auto base = static_cast<std::uint64_t>(field.size());
  // digits[i] is the lex rank of c_i; c_0 is the most significant digit.
  std::vector<std::uint64_t> digits(degree, 0);
  if (degree > 1) digits[0] = 1;  // c_0 = 0 means x divides the candidate
  while (true) {
    std::vector<typename F::Elem> coeffs(degree + 1, field.zero());
    for (unsigned i = 0; i < degree; ++i) coeffs[i] = unrank(digits[i]);
    coeffs[degree] = field.one();
    auto candidate = poly::make(field, std::move(coeffs));
    if (poly::is_irreducible(field, candidate)) return candidate;
    std::size_t i = degree;
    while (i-- > 0) {
      if (++digits[i] < base) break;
      digits[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) {
      throw Error(Errc::Internal, "no irreducible polynomial found");
    }
  }
}

}  // namespace scrimkit
