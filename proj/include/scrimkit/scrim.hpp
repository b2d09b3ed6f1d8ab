#pragma once

// Factorization of x^n - 1 over F_{q^2} into self-conjugate-reciprocal
// irreducible monic (SCRIM) factors and conjugate-reciprocal (CRIM) pairs,
// with three independent ways of counting them.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scrimkit/gf.hpp"

namespace scrimkit {

/// Orbit of rep under multiplication by q^2 modulo n.
struct Coset {
  u64 n = 1;
  u64 rep = 0;               // min(members)
  std::vector<u64> members;  // ascending
  std::size_t size() const { return members.size(); }
  bool contains(u64 i) const;
};

/// Cyclotomic cosets of q^2 modulo n, ordered by representative.
/// Throws NotCoprime unless gcd(n, q) = 1.
std::vector<Coset> coset_partition(u64 q, u64 n);

/// The minimal polynomial of alpha^rep is SCRIM iff -q*rep mod n lies in the coset.
bool is_scrim_coset(const Coset& c, u64 q);

struct ScrimCounts {
  u64 omega = 0;
  u64 lambda = 0;
  bool operator==(const ScrimCounts&) const = default;
};

/// |Omega| = sum_{d|n} lambda(q,d) phi(d) / ord_d(q^2), and the matching sum for |Lambda|.
ScrimCounts count_direct(u64 q, u64 n);

/// |Omega| by the recursive route: split off the 2-part with 2^min(m, r),
/// 2^r || q+1, drop odd primes l with 2-adic valuation of ord_l(q) other than
/// 1, and sum phi(d)/ord_d(q^2) over the divisors of what remains.
u64 count_recursive(u64 q, u64 n);

/// For odd n: every irreducible factor of x^n - 1 over F_{q^2} is SCRIM.
bool all_scrim(u64 q, u64 n);
/// For odd n: x - 1 is the only SCRIM factor.
bool only_trivial_scrim(u64 q, u64 n);

struct IrreducibleFactor {
  Coset coset;
  FPoly poly;            // monic, degree = coset size
  bool scrim = false;
  std::size_t partner;   // index of the dagger of poly (itself when scrim)
};

struct FactorizationReport {
  u64 q = 2;
  u64 n = 1;
  FieldSpec field;
  std::vector<IrreducibleFactor> factors;              // ordered by coset rep
  std::vector<FPoly> omega;                            // SCRIM factors
  std::vector<std::pair<FPoly, FPoly>> lambda_pairs;   // (g, g-dagger), smaller rep first

  ScrimCounts explicit_counts;
  ScrimCounts direct_counts;
  u64 recursive_omega = 0;

  bool counts_agree() const {
    return explicit_counts == direct_counts && explicit_counts.omega == recursive_omega;
  }
};

/// Explicit factorization through minimal polynomials of powers of a primitive
/// n-th root of unity. Counts from all three routes are recorded, not asserted.
FactorizationReport factor_xn_minus_1(const FieldSpec& field, u64 n,
                                      unsigned max_degree = kDefaultMaxExtensionDegree);
FactorizationReport factor_xn_minus_1(u64 q, u64 n);

}  // namespace scrimkit
