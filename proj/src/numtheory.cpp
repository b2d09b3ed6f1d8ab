#include "scrimkit/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "scrimkit/error.hpp"

namespace scrimkit::nt {

namespace {

constexpr u64 kTrialLimit = 1u << 16;

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<u64> FactoredInteger::primes() const {
  std::vector<u64> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FactoredInteger factor(u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cannot factor 0");
  FactoredInteger result;
  result.n = n;
  std::vector<u64> primes;
  u64 rest = n;
  for (u64 p = 2; p < kTrialLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

std::vector<u64> divisors(const FactoredInteger& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t count = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factor(n)); }

PrimePower as_prime_power(u64 q) {
  if (q < 2) throw Error(Errc::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  auto f = factor(q);
  if (f.factors.size() != 1) {
    throw Error(Errc::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  }
  return f.factors.front();
}

u64 mult_order(u64 a, u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  if (n == 1) return 1;
  a %= n;
  if (std::gcd(a, n) != 1) {
    throw Error(Errc::NotCoprime, std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  // The order divides phi(n); strip prime factors while the power stays 1.
  const u64 phi = euler_phi(n);
  u64 order = phi;
  for (const auto& [p, e] : factor(phi).factors) {
    for (unsigned i = 0; i < e && order % p == 0 && powmod(a, order / p, n) == 1; ++i) {
      order /= p;
    }
  }
  return order;
}

unsigned two_adic_valuation(u64 i) {
  if (i == 0) throw Error(Errc::InvalidArgument, "valuation of 0 is undefined");
  return static_cast<unsigned>(__builtin_ctzll(i));
}

bool lambda_predicate(u64 q, u64 d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be positive");
  if (d <= 2 && std::gcd(q, d) == 1) return true;
  const u64 ord = mult_order(q, d);
  for (u64 e = 1; e <= 2 * ord - 1; e += 2) {
    if (powmod(q, e, d) == d - 1) return true;
  }
  return false;
}

u64 euler_phi(const FactoredInteger& f) {
  u64 phi = f.n;
  for (const auto& pp : f.factors) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factor(n)); }

bool checked_pow(u64 a, unsigned k, u64& out) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(r, a, &r)) return false;
  }
  out = r;
  return true;
}

}  // namespace scrimkit::nt
