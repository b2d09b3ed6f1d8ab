#include <doctest.h>

#include <numeric>
#include <random>

#include "scrimkit/hlcd.hpp"
#include "scrimkit/poly_text.hpp"

using namespace scrimkit;

namespace {

struct Sweep {
  u64 divisors = 0;
  u64 lcd = 0;
  u64 method_c_runs = 0;
  bool agree = true;
};

// Every divisor of x^n - 1: exponents 0..p^nu on each factor of x^n' - 1.
Sweep brute_force(const HermitianLcd& lcd, bool run_method_c) {
  const auto& F = lcd.field();
  const auto& base = lcd.base_factorization();
  const std::size_t k = base.factors.size();
  const u64 top = lcd.multiplicity();
  Sweep s;
  std::vector<u64> e(k, 0);
  while (true) {
    FPoly g = poly::one(F);
    for (std::size_t i = 0; i < k; ++i) {
      for (u64 j = 0; j < e[i]; ++j) g = poly::mul(F, g, base.factors[i].poly);
    }
    const CyclicCodeGF code{F.q(), lcd.n(), g};
    const bool a = lcd.gcd_test(code);
    const bool b = lcd.dagger_test(code);
    s.agree = s.agree && a == b;
    if (run_method_c) {
      s.agree = s.agree && lcd.intersection_oracle(code) == a;
      ++s.method_c_runs;
    }
    ++s.divisors;
    s.lcd += a;
    std::size_t i = 0;
    while (i < k && ++e[i] > top) e[i++] = 0;
    if (i == k) break;
  }
  return s;
}

}  // namespace

TEST_SUITE("hlcd") {
  TEST_CASE("hermitian_dual_generator examples") {
    const auto F = FieldSpec::for_q(2);
    HermitianLcd lcd(F, 3);
    const auto xn = lcd.xn_minus_1();
    CHECK(lcd.hermitian_dual_generator(lcd.make_code(poly::one(F))) == xn);
    CHECK(lcd.hermitian_dual_generator(lcd.make_code(xn)) == poly::one(F));
    const auto g = parse_poly(F, "x + (1)");
    CHECK(lcd.hermitian_dual_generator(lcd.make_code(g)) == parse_poly(F, "x^2 + x + (1)"));
  }

  TEST_CASE("make_code validates generators") {
    const auto F = FieldSpec::for_q(2);
    HermitianLcd lcd(F, 3);
    CHECK_THROWS_AS(lcd.make_code(parse_poly(F, "x^2 + (1)")), Error);
    CHECK_THROWS_AS(lcd.make_code(parse_poly(F, "(w)*x + (1)")), Error);
    CHECK(lcd.make_code(parse_poly(F, "x + (w)")).dimension() == 2);
  }

  TEST_CASE("is_hermitian_lcd examples") {
    const auto F = FieldSpec::for_q(2);
    HermitianLcd l3(F, 3);
    const auto v3 = l3.is_hermitian_lcd(l3.make_code(parse_poly(F, "x + (1)")));
    CHECK(v3.is_lcd());
    CHECK(v3.consistent());
    REQUIRE(v3.intersection.has_value());

    HermitianLcd l6(F, 6);
    CHECK(l6.multiplicity() == 2);
    CHECK(l6.n_prime() == 3);
    const auto v6a = l6.is_hermitian_lcd(l6.make_code(parse_poly(F, "x + (1)")));
    CHECK_FALSE(v6a.is_lcd());
    CHECK(v6a.consistent());
    const auto v6b = l6.is_hermitian_lcd(l6.make_code(parse_poly(F, "x^2 + (1)")));
    CHECK(v6b.is_lcd());
    CHECK(v6b.consistent());
  }

  TEST_CASE("intersection oracle respects its budget") {
    const auto F = FieldSpec::for_q(2);
    HermitianLcd lcd(F, 7);
    Budget tight;
    tight.max_intersection_length = 5;
    const auto code = lcd.make_code(parse_poly(F, "x + (1)"));
    try {
      lcd.intersection_oracle(code, tight);
      FAIL("budget ignored");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OracleTooLarge);
    }
    const auto v = lcd.is_hermitian_lcd(code, tight);
    CHECK_FALSE(v.intersection.has_value());
    CHECK(v.is_lcd());
  }

  TEST_CASE("count_hermitian_lcd examples") {
    CHECK(count_hermitian_lcd(2, 3) == 8);
    CHECK(count_hermitian_lcd(2, 7) == 4);
    CHECK(count_hermitian_lcd(2, 6) == 8);
    CHECK(HermitianLcd(FieldSpec::for_q(2), 6).count() == 8);
  }

  TEST_CASE("enumerate examples") {
    const auto F = FieldSpec::for_q(2);
    const auto e3 = HermitianLcd(F, 3).enumerate();
    CHECK(e3.size() == 8);
    const auto e6 = HermitianLcd(F, 6).enumerate();
    CHECK(e6.size() == 8);
    for (const auto& c : e6) CHECK(c.generator.degree() % 2 == 0);
    for (u64 q : {2ull, 3ull, 4ull}) {
      const auto e1 = HermitianLcd(FieldSpec::for_q(q), 1).enumerate();
      REQUIRE(e1.size() == 2);
      const auto G = FieldSpec::for_q(q);
      CHECK(e1[0].generator == poly::one(G));
      CHECK(e1[1].generator == poly::x_pow_minus(G, 1, G.one()));
    }
    Budget tight;
    tight.max_enumeration = 4;
    CHECK_THROWS_AS(HermitianLcd(F, 3).enumerate(tight), Error);
  }

  TEST_CASE("enumeration yields exactly the LCD codes, all distinct") {
    for (u64 q : {2ull, 3ull, 4ull}) {
      const auto F = FieldSpec::for_q(q);
      for (u64 n = 1; n <= 20; ++n) {
        HermitianLcd lcd(F, n);
        const auto codes = lcd.enumerate();
        REQUIRE(codes.size() == lcd.count());
        REQUIRE(lcd.count() == count_hermitian_lcd(q, n));
        std::vector<std::vector<Gf>> gens;
        for (const auto& c : codes) {
          const auto v = lcd.is_hermitian_lcd(c);
          REQUIRE(v.consistent());
          REQUIRE(v.is_lcd());
          gens.push_back(c.generator.coeffs);
        }
        std::sort(gens.begin(), gens.end());
        REQUIRE(std::unique(gens.begin(), gens.end()) == gens.end());
      }
    }
  }
}

TEST_SUITE("properties") {
  TEST_CASE("lcd brute force q 2 and 3 all three methods") {
    for (u64 q : {2ull, 3ull}) {
      const auto F = FieldSpec::for_q(q);
      for (u64 n = 1; n <= 30; ++n) {
        HermitianLcd lcd(F, n);
        const auto s = brute_force(lcd, true);
        REQUIRE_MESSAGE(s.agree, "q=" << q << " n=" << n);
        REQUIRE(s.lcd == count_hermitian_lcd(q, n));
      }
    }
  }

  TEST_CASE("lcd brute force q 4 and 5") {
    for (u64 q : {4ull, 5ull}) {
      const auto F = FieldSpec::for_q(q);
      for (u64 n = 1; n <= 30; ++n) {
        if ((q == 4 && n == 30) || (q == 5 && n == 24)) continue;
        HermitianLcd lcd(F, n);
        const auto s = brute_force(lcd, n <= 12);
        REQUIRE_MESSAGE(s.agree, "q=" << q << " n=" << n);
        REQUIRE(s.lcd == count_hermitian_lcd(q, n));
      }
    }
  }
}

// 3^15 and 2^24 divisors; a few minutes on one core.
TEST_SUITE("heavy") {
  TEST_CASE("lcd brute force q 4 n 30 and q 5 n 24") {
    for (auto [q, n] : {std::pair<u64, u64>{4, 30}, {5, 24}}) {
      HermitianLcd lcd(FieldSpec::for_q(q), n);
      const auto s = brute_force(lcd, false);
      REQUIRE_MESSAGE(s.agree, "q=" << q << " n=" << n);
      REQUIRE(s.divisors == (q == 4 ? 14348907u : 16777216u));
      REQUIRE(s.lcd == count_hermitian_lcd(q, n));
    }
  }

  TEST_CASE("coprime lengths: LCD iff g = g-dagger") {
    for (u64 q : {2ull, 3ull, 4ull, 5ull}) {
      const auto F = FieldSpec::for_q(q);
      for (u64 n = 1; n <= 16; ++n) {
        if (std::gcd(n, q) != 1) continue;
        HermitianLcd lcd(F, n);
        const auto& factors = lcd.base_factorization().factors;
        for (u64 mask = 0; mask < (u64{1} << factors.size()); ++mask) {
          FPoly g = poly::one(F);
          for (std::size_t i = 0; i < factors.size(); ++i) {
            if ((mask >> i) & 1) g = poly::mul(F, g, factors[i].poly);
          }
          REQUIRE(lcd.gcd_test(lcd.make_code(g)) == (poly::dagger(F, g) == g));
        }
      }
    }
  }

  TEST_CASE("dual of the dual is the code") {
    std::mt19937_64 rng(41);
    for (u64 q : {2ull, 3ull, 4ull}) {
      const auto F = FieldSpec::for_q(q);
      for (u64 n = 1; n <= 24; ++n) {
        HermitianLcd lcd(F, n);
        const auto& factors = lcd.base_factorization().factors;
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<u64> e(factors.size());
          for (auto& v : e) v = rng() % (lcd.multiplicity() + 1);
          const auto code = lcd.code_from_multiplicities(e);
          const auto dual = lcd.make_code(lcd.hermitian_dual_generator(code));
          REQUIRE(dual.generator.degree() == static_cast<int>(code.dimension()));
          REQUIRE(lcd.hermitian_dual_generator(dual) == code.generator);
          REQUIRE(lcd.multiplicities(code.generator) == e);
        }
      }
    }
  }
}
