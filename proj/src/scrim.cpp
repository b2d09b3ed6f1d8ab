#include "scrimkit/scrim.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace scrimkit {

namespace {

void require_coprime(u64 q, u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  if (std::gcd(q, n) != 1) {
    throw Error(Errc::NotCoprime,
                "gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
  }
}

u64 ord_q2(u64 q, u64 d) { return nt::mult_order(nt::mulmod(q % d, q % d, d), d); }

// Number of irreducible factors of x^d' - 1 over F_{q^2} summed over d' | n:
// sum_{d|n} phi(d) / ord_d(q^2).
u64 total_factor_count(u64 q, u64 n) {
  u64 total = 0;
  for (u64 d : nt::divisors(n)) total += nt::euler_phi(d) / ord_q2(q, d);
  return total;
}

}  // namespace

bool Coset::contains(u64 i) const { return std::binary_search(members.begin(), members.end(), i); }

std::vector<Coset> coset_partition(u64 q, u64 n) {
  require_coprime(q, n);
  const u64 step = nt::mulmod(q % n, q % n, n);
  std::vector<bool> seen(n, false);
  std::vector<Coset> out;
  for (u64 i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Coset c{n, i, {}};
    u64 j = i;
    do {
      c.members.push_back(j);
      seen[j] = true;
      j = nt::mulmod(j, step, n);
    } while (j != i);
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_scrim_coset(const Coset& c, u64 q) {
  const u64 n = c.n;
  const u64 image = (n - nt::mulmod(q % n, c.rep, n)) % n;
  return c.contains(image);
}

ScrimCounts count_direct(u64 q, u64 n) {
  require_coprime(q, n);
  ScrimCounts counts;
  for (u64 d : nt::divisors(n)) {
    const u64 phi = nt::euler_phi(d);
    const u64 ord = ord_q2(q, d);
    if (nt::lambda_predicate(q, d)) {
      counts.omega += phi / ord;
    } else {
      if ((phi / ord) % 2 != 0) {
        throw Error(Errc::Internal, "odd number of non-SCRIM cosets of order " + std::to_string(d));
      }
      counts.lambda += phi / (2 * ord);
    }
  }
  return counts;
}

u64 count_recursive(u64 q, u64 n) {
  require_coprime(q, n);
  const unsigned m = nt::two_adic_valuation(n);
  const u64 odd_part = n >> m;

  u64 two_part = 1;
  if (m > 0) {
    // gcd(n, q) = 1 with n even forces q odd.
    const unsigned r = nt::two_adic_valuation(q + 1);
    two_part = u64{1} << std::min(m, r);
  }

  u64 kept = 1;
  for (const auto& [l, r] : nt::factor(odd_part).factors) {
    if (nt::two_adic_valuation(nt::mult_order(q, l)) != 1) continue;
    for (unsigned i = 0; i < r; ++i) kept *= l;
  }
  return two_part * total_factor_count(q, kept);
}

bool all_scrim(u64 q, u64 n) {
  if (n % 2 == 0) throw Error(Errc::EvenInput, "n must be odd");
  require_coprime(q, n);
  for (u64 l : nt::factor(n).primes()) {
    if (ord_q2(q, l) % 2 == 0 || nt::mult_order(q, l) % 2 != 0) return false;
  }
  return true;
}

bool only_trivial_scrim(u64 q, u64 n) {
  if (n % 2 == 0) throw Error(Errc::EvenInput, "n must be odd");
  require_coprime(q, n);
  for (u64 l : nt::factor(n).primes()) {
    if (ord_q2(q, l) % 2 != 0 && nt::mult_order(q, l) % 2 == 0) return false;
  }
  return true;
}

FactorizationReport factor_xn_minus_1(const FieldSpec& field, u64 n, unsigned max_degree) {
  const u64 q = field.q();
  require_coprime(q, n);
  const auto cosets = coset_partition(q, n);
  const PrimitiveRoot root = primitive_nth_root(field, n, max_degree);
  const ExtensionField& big = root.ctx.field;

  std::vector<ExtensionField::Elem> powers;
  powers.reserve(n);
  powers.push_back(big.one());
  for (u64 j = 1; j < n; ++j) powers.push_back(big.mul(powers.back(), root.alpha));

  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (u64 j : cosets[i].members) owner[j] = i;
  }

  FactorizationReport report{q, n, field, {}, {}, {}, {}, {}, 0};
  report.factors.reserve(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    const Coset& c = cosets[i];
    // prod_{j in coset} (x - alpha^j), coefficients lowest degree first.
    std::vector<ExtensionField::Elem> acc{big.one()};
    for (u64 j : c.members) {
      const auto root_j = powers[j];
      acc.push_back(big.zero());
      for (std::size_t k = acc.size() - 1; k > 0; --k) {
        acc[k] = big.sub(acc[k - 1], big.mul(root_j, acc[k]));
      }
      acc[0] = big.neg(big.mul(root_j, acc[0]));
    }
    std::vector<Gf> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& a : acc) {
      if (!big.in_base(a)) {
        throw Error(Errc::Internal, "minimal polynomial coefficient outside F_{q^2} for coset " +
                                        std::to_string(c.rep));
      }
      coeffs.push_back(a[0]);
    }
    const u64 image = (n - nt::mulmod(q % n, c.rep, n)) % n;
    IrreducibleFactor factor{c, poly::make(field, std::move(coeffs)), is_scrim_coset(c, q),
                             owner[image]};
    report.factors.push_back(std::move(factor));
  }

  for (std::size_t i = 0; i < report.factors.size(); ++i) {
    const auto& f = report.factors[i];
    if (f.scrim) {
      report.omega.push_back(f.poly);
    } else if (i < f.partner) {
      report.lambda_pairs.emplace_back(f.poly, report.factors[f.partner].poly);
    }
  }
  report.explicit_counts = {report.omega.size(), report.lambda_pairs.size()};
  report.direct_counts = count_direct(q, n);
  report.recursive_omega = count_recursive(q, n);
  return report;
}

FactorizationReport factor_xn_minus_1(u64 q, u64 n) {
  return factor_xn_minus_1(FieldSpec::for_q(q), n);
}

}  // namespace scrimkit
