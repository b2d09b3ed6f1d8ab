#pragma once

// The chain ring R = F_{q^2}[u]/(u^t), Hensel lifts of x^n - r0 over R and
// Hermitian self-dual cyclic codes built from them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scrimkit/bigint.hpp"
#include "scrimkit/budget.hpp"
#include "scrimkit/scrim.hpp"

namespace scrimkit {

class ChainRing {
 public:
  /// Coordinates over F_{q^2}; index i holds the coefficient of u^i.
  using Elem = std::vector<Gf>;

  /// Throws InvalidArgument for t = 0.
  ChainRing(FieldSpec field, unsigned t);

  const FieldSpec& field() const { return field_; }
  unsigned t() const { return t_; }
  u64 q() const { return field_.q(); }
  /// (q^2)^t
  BigInt size() const;

  Elem zero() const { return Elem(t_, field_.zero()); }
  Elem one() const { return embed(field_.one()); }
  Elem embed(Gf a) const;
  /// c * u^k, zero when k >= t.
  Elem u_power(unsigned k, Gf c) const;
  Elem u_power(unsigned k) const { return u_power(k, field_.one()); }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  /// Throws InvalidArgument for non-units.
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool is_unit(const Elem& a) const { return !field_.is_zero(a[0]); }
  /// u^i a_i -> u^i a_i^q
  Elem conj(const Elem& a) const;

  /// Largest v with u^v | a; t for zero.
  unsigned valuation(const Elem& a) const;
  Gf residue(const Elem& a) const { return a[0]; }

  /// a / u^v for v <= valuation(a), with the top v coordinates zero.
  Elem shift_down(const Elem& a, unsigned v) const;

  /// "(w)*u^2+u+1"
  std::string format(const Elem& a) const;

 private:
  FieldSpec field_;
  unsigned t_;
};

using RPoly = Poly<ChainRing>;

RPoly embed_poly(const ChainRing& ring, const FPoly& f);
FPoly residue_poly(const ChainRing& ring, const RPoly& f);
/// Same layout as format_poly, with chain-ring coefficients in parentheses.
std::string format_rpoly(const ChainRing& ring, const RPoly& f);

/// r0 = (1 + u c)(1 + u conj(c))^{-1}, c the lex-least element of F_{q^2} outside F_q.
/// Throws NilpotencyTooSmall for t < 2.
ChainRing::Elem make_r0(const ChainRing& ring);

struct LiftedFactorization {
  ChainRing ring;
  u64 n = 1;
  ChainRing::Elem r0;
  std::vector<RPoly> factors;          // monic, ordered by coset rep of the residue
  std::vector<FPoly> residues;         // irreducible factors of x^n - 1 over F_{q^2}
  std::vector<Coset> cosets;
  std::vector<bool> residue_scrim;     // h_i = h_i-dagger
  std::vector<std::size_t> dagger_perm;              // f_{perm[i]} = f_i-dagger
  std::optional<std::vector<std::size_t>> star_perm; // f_{perm[i]} = f_i*, when r0^2 = 1

  std::size_t size() const { return factors.size(); }
  RPoly target() const;  // x^n - r0
};

/// Linear Hensel lifting of x^n - 1 = prod h_i to x^n - r0 = prod f_i.
/// Throws NotCoprime, NilpotencyTooSmall, LiftMismatch.
LiftedFactorization hensel_lift(const FieldSpec& field, u64 n, unsigned t);
LiftedFactorization hensel_lift(u64 q, u64 n, unsigned t);

/// (f_i = f_i-dagger) <=> (h_i = h_i-dagger) for every i, and the dagger
/// permutation is an involution.
bool dagger_is_preserved(const LiftedFactorization& lift);

/// The code generated by prod f_i^{k_i} in R[x]/(x^n - 1).
struct CyclicCodeCR {
  std::shared_ptr<const LiftedFactorization> lift;
  std::vector<unsigned> k;

  /// log_{q^2} |C| = sum (t - k_i) deg f_i
  u64 cardinality_exponent() const;
  BigInt cardinality() const;
  /// prod f_i^{k_i} mod x^n - 1
  RPoly generator() const;
};

/// Throws InvalidArgument unless k has one entry per factor, each at most t.
CyclicCodeCR make_code(std::shared_ptr<const LiftedFactorization> lift, std::vector<unsigned> k);

/// k'_{dagger(i)} = t - k_i
CyclicCodeCR hermitian_dual(const CyclicCodeCR& code);
bool is_hermitian_self_dual(const CyclicCodeCR& code);
/// k'_{star(i)} = t - k_i; Unsupported unless r0^2 = 1.
CyclicCodeCR euclidean_dual(const CyclicCodeCR& code);

/// Throw NotCoprime, NilpotencyTooSmall.
bool self_dual_exists(u64 q, u64 n, unsigned t);
BigInt count_self_dual(u64 q, u64 n, unsigned t);

/// Factors fixed by the dagger get t/2; each pair (i, dagger(i)), i smaller,
/// gets (k, t - k) for k = 0..t. Empty for odd t. Throws EnumerationTooLarge.
std::vector<CyclicCodeCR> enumerate_self_dual(std::shared_ptr<const LiftedFactorization> lift,
                                              const Budget& budget = {});

struct OracleReport {
  bool self_orthogonal = false;
  u64 size_exponent = 0;     // log_{q^2} |C| from the echelon form
  u64 formula_exponent = 0;  // sum (t - k_i) deg f_i
  bool self_dual = false;    // self-orthogonal and |C|^2 = (q^2)^{tn}
};

/// Works on codewords directly: Hermitian products of all cyclic shifts of the
/// generator, and |C| from a chain-ring echelon form of those shifts.
/// Throws OracleTooLarge when (q^2)^{tn} exceeds 2^budget.max_oracle_bits.
OracleReport codeword_duality_oracle(const CyclicCodeCR& code, const Budget& budget = {});
bool oracle_within_budget(const LiftedFactorization& lift, const Budget& budget = {});

}  // namespace scrimkit
