#include <doctest.h>

#include <numeric>

#include "scrimkit/chainring.hpp"
#include "scrimkit/hlcd.hpp"

using namespace scrimkit;

TEST_SUITE("properties") {
  TEST_CASE("LCD count depends only on the coprime part of n") {
    for (u64 q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
      const u64 p = nt::as_prime_power(q).prime;
      for (u64 m = 1; m <= 60; ++m) {
        if (std::gcd(m, q) != 1) continue;
        const auto c = count_direct(q, m);
        const BigInt expected = big_pow(2, c.omega + c.lambda);
        u64 n = m;
        for (int nu = 0; nu <= 2; ++nu, n *= p) REQUIRE(count_hermitian_lcd(q, n) == expected);
      }
    }
  }

  TEST_CASE("self-dual count against the CRIM pair count") {
    for (u64 q : {2ull, 3ull, 4ull, 5ull, 7ull}) {
      for (u64 n = 1; n <= 60; ++n) {
        if (std::gcd(n, q) != 1) continue;
        const u64 lambda = count_direct(q, n).lambda;
        for (unsigned t = 2; t <= 6; ++t) {
          const BigInt expected = t % 2 == 0 ? big_pow(t + 1, lambda) : BigInt(0);
          REQUIRE(count_self_dual(q, n, t) == expected);
          REQUIRE(self_dual_exists(q, n, t) == (t % 2 == 0));
        }
      }
    }
  }
}
