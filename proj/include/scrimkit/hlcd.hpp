#pragma once

// Hermitian complementary-dual (LCD) cyclic codes over F_{q^2} of any length
// n = p^nu * n', repeated roots included.

#include <optional>
#include <vector>

#include "scrimkit/bigint.hpp"
#include "scrimkit/budget.hpp"
#include "scrimkit/scrim.hpp"

namespace scrimkit {

/// A cyclic code of length n given by its monic generator g | x^n - 1.
struct CyclicCodeGF {
  u64 q = 2;
  u64 n = 1;
  FPoly generator;
  u64 dimension() const { return n - static_cast<u64>(generator.degree()); }
};

struct LcdVerdict {
  bool gcd_test = false;       // gcd(g, h-dagger) = 1
  bool dagger_test = false;    // g = g-dagger with full multiplicities
  std::optional<bool> intersection;  // C ∩ C^⊥H = {0}, when within budget

  bool consistent() const {
    return gcd_test == dagger_test && (!intersection || *intersection == gcd_test);
  }
  bool is_lcd() const { return gcd_test; }
};

/// 2^(|Omega(n')| + |Lambda(n')|), independent of nu.
BigInt count_hermitian_lcd(u64 q, u64 n);

/// Works against the factorization of x^n' - 1; x^n - 1 is its p^nu-th power.
class HermitianLcd {
 public:
  HermitianLcd(FieldSpec field, u64 n);

  const FieldSpec& field() const { return field_; }
  u64 n() const { return n_; }
  u64 n_prime() const { return base_.n; }
  /// p^nu, the multiplicity of every irreducible factor in x^n - 1.
  u64 multiplicity() const { return multiplicity_; }
  const FactorizationReport& base_factorization() const { return base_; }
  const FPoly& xn_minus_1() const { return xn_minus_1_; }

  /// Throws InvalidArgument unless g is monic and divides x^n - 1.
  CyclicCodeGF make_code(const FPoly& generator) const;
  /// The code with generator prod_i f_i^{e_i} over the base factors.
  CyclicCodeGF code_from_multiplicities(const std::vector<u64>& exponents) const;
  /// Exponent of each base factor in g.
  std::vector<u64> multiplicities(const FPoly& g) const;

  /// h-dagger with h = (x^n - 1) / g.
  FPoly hermitian_dual_generator(const CyclicCodeGF& code) const;

  bool gcd_test(const CyclicCodeGF& code) const;
  bool dagger_test(const CyclicCodeGF& code) const;
  /// Row-space check; throws OracleTooLarge above budget.max_intersection_length.
  bool intersection_oracle(const CyclicCodeGF& code, const Budget& budget = {}) const;
  /// Runs every method the budget allows.
  LcdVerdict is_hermitian_lcd(const CyclicCodeGF& code, const Budget& budget = {}) const;

  BigInt count() const;
  /// All Hermitian LCD codes: each SCRIM factor and each CRIM pair appears with
  /// exponent 0 or p^nu. Throws EnumerationTooLarge.
  std::vector<CyclicCodeGF> enumerate(const Budget& budget = {}) const;

 private:
  FieldSpec field_;
  u64 n_;
  u64 multiplicity_;
  FactorizationReport base_;
  FPoly xn_minus_1_;
};

}  // namespace scrimkit
