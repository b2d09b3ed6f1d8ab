#pragma once

#include <cstdint>
#include <vector>

namespace scrimkit::nt {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// n together with its prime factorization, primes ascending.
struct FactoredInteger {
  u64 n = 1;
  std::vector<PrimePower> factors;

  std::vector<u64> primes() const;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Trial division for small cofactors, Pollard rho beyond that.
FactoredInteger factor(u64 n);

/// All positive divisors of n, ascending.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const FactoredInteger& f);

/// If q = p^e with p prime, returns (p, e); throws NonPrimeCharacteristic otherwise.
PrimePower as_prime_power(u64 q);

/// Smallest s >= 1 with a^s = 1 (mod n). mult_order(a, 1) = 1.
/// Throws NotCoprime when gcd(a, n) != 1.
u64 mult_order(u64 a, u64 n);

/// Exponent of the exact power of 2 dividing i (i >= 1).
unsigned two_adic_valuation(u64 i);

/// 1 iff d | q^e + 1 for some odd e >= 1.
///
/// Only odd e in [1, 2*ord_d(q) - 1] need testing: q^e mod d depends on e
/// modulo ord_d(q), and shifting e by 2*ord_d(q) keeps its parity.
bool lambda_predicate(u64 q, u64 d);

u64 euler_phi(u64 n);
u64 euler_phi(const FactoredInteger& f);

/// Checked a^k; returns false on 64-bit overflow.
bool checked_pow(u64 a, unsigned k, u64& out);

}  // namespace scrimkit::nt
