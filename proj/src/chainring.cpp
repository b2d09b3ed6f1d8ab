#include "scrimkit/chainring.hpp"

#include <numeric>
#include <string>

namespace scrimkit {

ChainRing::ChainRing(FieldSpec field, unsigned t) : field_(std::move(field)), t_(t) {
  if (t == 0) throw Error(Errc::InvalidArgument, "nilpotency index must be positive");
}

BigInt ChainRing::size() const { return big_pow(field_.size(), t_); }

ChainRing::Elem ChainRing::embed(Gf a) const {
  Elem out = zero();
  out[0] = a;
  return out;
}

ChainRing::Elem ChainRing::u_power(unsigned k, Gf c) const {
  Elem out = zero();
  if (k < t_) out[k] = c;
  return out;
}

ChainRing::Elem ChainRing::add(const Elem& a, const Elem& b) const {
  Elem out(t_);
  for (unsigned i = 0; i < t_; ++i) out[i] = field_.add(a[i], b[i]);
  return out;
}

ChainRing::Elem ChainRing::sub(const Elem& a, const Elem& b) const {
  Elem out(t_);
  for (unsigned i = 0; i < t_; ++i) out[i] = field_.sub(a[i], b[i]);
  return out;
}

ChainRing::Elem ChainRing::neg(const Elem& a) const {
  Elem out(t_);
  for (unsigned i = 0; i < t_; ++i) out[i] = field_.neg(a[i]);
  return out;
}

ChainRing::Elem ChainRing::mul(const Elem& a, const Elem& b) const {
  Elem out = zero();
  for (unsigned i = 0; i < t_; ++i) {
    if (field_.is_zero(a[i])) continue;
    for (unsigned j = 0; i + j < t_; ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(a[i], b[j]));
    }
  }
  return out;
}

ChainRing::Elem ChainRing::inv(const Elem& a) const {
  if (!is_unit(a)) throw Error(Errc::InvalidArgument, "element of the maximal ideal has no inverse");
  const Gf a0_inv = field_.inv(a[0]);
  Elem b = zero();
  b[0] = a0_inv;
  for (unsigned k = 1; k < t_; ++k) {
    Gf acc = field_.zero();
    for (unsigned j = 1; j <= k; ++j) acc = field_.add(acc, field_.mul(a[j], b[k - j]));
    b[k] = field_.neg(field_.mul(a0_inv, acc));
  }
  return b;
}

bool ChainRing::is_zero(const Elem& a) const {
  for (const auto& c : a) {
    if (!field_.is_zero(c)) return false;
  }
  return true;
}

ChainRing::Elem ChainRing::conj(const Elem& a) const {
  Elem out(t_);
  for (unsigned i = 0; i < t_; ++i) out[i] = field_.conj(a[i]);
  return out;
}

unsigned ChainRing::valuation(const Elem& a) const {
  unsigned v = 0;
  while (v < t_ && field_.is_zero(a[v])) ++v;
  return v;
}

ChainRing::Elem ChainRing::shift_down(const Elem& a, unsigned v) const {
  Elem out = zero();
  for (unsigned i = v; i < t_; ++i) out[i - v] = a[i];
  return out;
}

std::string ChainRing::format(const Elem& a) const {
  std::string out;
  for (unsigned i = t_; i-- > 0;) {
    const Gf c = a[i];
    if (field_.is_zero(c)) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += field_.format(c);
      continue;
    }
    if (c != field_.one()) out += "(" + field_.format(c) + ")*";
    out += "u";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RPoly embed_poly(const ChainRing& ring, const FPoly& f) {
  std::vector<ChainRing::Elem> coeffs;
  coeffs.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) coeffs.push_back(ring.embed(c));
  return poly::make(ring, std::move(coeffs));
}

FPoly residue_poly(const ChainRing& ring, const RPoly& f) {
  std::vector<Gf> coeffs;
  coeffs.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) coeffs.push_back(ring.residue(c));
  return poly::make(ring.field(), std::move(coeffs));
}

std::string format_rpoly(const ChainRing& ring, const RPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto one = ring.one();
  for (std::size_t k = f.coeffs.size(); k-- > 0;) {
    const auto& c = f.coeffs[k];
    if (ring.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    if (!(k > 0 && c == one)) {
      out += "(" + ring.format(c) + ")";
      if (k > 0) out += "*";
    }
    if (k > 0) out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

ChainRing::Elem make_r0(const ChainRing& ring) {
  if (ring.t() < 2) throw Error(Errc::NilpotencyTooSmall, "r0 needs t >= 2");
  const FieldSpec& F = ring.field();
  Gf c = F.zero();
  for (u64 r = 0; r < F.size(); ++r) {
    c = F.lex_unrank(r);
    if (!F.in_subfield_q(c)) break;
  }
  const auto num = ring.add(ring.one(), ring.u_power(1, c));
  const auto den = ring.add(ring.one(), ring.u_power(1, F.conj(c)));
  return ring.mul(num, ring.inv(den));
}

RPoly LiftedFactorization::target() const {
  return poly::x_pow_minus(ring, n, r0);
}

namespace {

void require_lift_params(u64 q, u64 n, unsigned t) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  if (std::gcd(q, n) != 1) {
    throw Error(Errc::NotCoprime, "gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
  }
  if (t < 2) throw Error(Errc::NilpotencyTooSmall, "t must be at least 2");
}

// Index j with list[j] == f, or size() when absent.
std::size_t find_poly(const std::vector<RPoly>& list, const RPoly& f) {
  for (std::size_t j = 0; j < list.size(); ++j) {
    if (list[j] == f) return j;
  }
  return list.size();
}

}  // namespace

LiftedFactorization hensel_lift(const FieldSpec& field, u64 n, unsigned t) {
  require_lift_params(field.q(), n, t);
  const FactorizationReport base = factor_xn_minus_1(field, n);
  ChainRing ring(field, t);
  const auto r0 = make_r0(ring);

  LiftedFactorization lift{ring, n, r0, {}, {}, {}, {}, {}, std::nullopt};
  const std::size_t m = base.factors.size();
  for (const auto& f : base.factors) {
    lift.residues.push_back(f.poly);
    lift.cosets.push_back(f.coset);
    lift.residue_scrim.push_back(f.scrim);
    lift.factors.push_back(embed_poly(ring, f.poly));
  }

  // s_i = (prod_{j != i} h_j)^{-1} mod h_i
  std::vector<FPoly> cofactor(m);
  for (std::size_t i = 0; i < m; ++i) {
    FPoly rest = poly::one(field);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) rest = poly::mul(field, rest, lift.residues[j]);
    }
    const auto bz = poly::ext_gcd(field, rest, lift.residues[i]);
    if (bz.gcd.degree() != 0) throw Error(Errc::LiftMismatch, "residue factors are not coprime");
    cofactor[i] = poly::rem(field, bz.s, lift.residues[i]);
  }

  const RPoly target = lift.target();
  auto product = [&] {
    RPoly p = poly::one(ring);
    for (const auto& f : lift.factors) p = poly::mul(ring, p, f);
    return p;
  };

  for (unsigned k = 1; k < t; ++k) {
    const RPoly err = poly::sub(ring, target, product());
    // err vanishes modulo u^k; e is its u^k coordinate.
    std::vector<Gf> e_coeffs;
    for (const auto& c : err.coeffs) {
      if (ring.valuation(c) < k) throw Error(Errc::LiftMismatch, "product differs from target below u^k");
      e_coeffs.push_back(c[k]);
    }
    if (err.degree() >= static_cast<int>(n)) throw Error(Errc::LiftMismatch, "error term of degree >= n");
    const FPoly e = poly::make(field, std::move(e_coeffs));
    for (std::size_t i = 0; i < m; ++i) {
      const FPoly delta = poly::rem(field, poly::mul(field, e, cofactor[i]), lift.residues[i]);
      std::vector<ChainRing::Elem> shift;
      for (const auto& c : delta.coeffs) shift.push_back(ring.u_power(k, c));
      lift.factors[i] = poly::add(ring, lift.factors[i], poly::make(ring, std::move(shift)));
    }
  }
  if (product() != target) throw Error(Errc::LiftMismatch, "lifted product differs from x^n - r0");

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = find_poly(lift.factors, poly::dagger(ring, lift.factors[i]));
    if (j == m) throw Error(Errc::LiftMismatch, "dagger of a lifted factor is missing");
    lift.dagger_perm.push_back(j);
  }

  if (ring.mul(r0, r0) == ring.one()) {
    std::vector<std::size_t> star;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = find_poly(lift.factors, poly::reciprocal_star(ring, lift.factors[i]));
      if (j == m) throw Error(Errc::LiftMismatch, "reciprocal of a lifted factor is missing");
      star.push_back(j);
    }
    lift.star_perm = std::move(star);
  }
  return lift;
}

LiftedFactorization hensel_lift(u64 q, u64 n, unsigned t) {
  return hensel_lift(FieldSpec::for_q(q), n, t);
}

bool dagger_is_preserved(const LiftedFactorization& lift) {
  const auto& perm = lift.dagger_perm;
  if (perm.size() != lift.size()) return false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || perm[perm[i]] != i) return false;
    const bool lifted_fixed = perm[i] == i;
    const auto& h = lift.residues[i];
    const bool residue_fixed = poly::dagger(lift.ring.field(), h) == h;
    if (lifted_fixed != residue_fixed) return false;
  }
  return true;
}

u64 CyclicCodeCR::cardinality_exponent() const {
  u64 total = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    total += static_cast<u64>(lift->ring.t() - k[i]) * static_cast<u64>(lift->factors[i].degree());
  }
  return total;
}

BigInt CyclicCodeCR::cardinality() const { return big_pow(lift->ring.field().size(), cardinality_exponent()); }

RPoly CyclicCodeCR::generator() const {
  const auto& ring = lift->ring;
  const RPoly modulus = poly::x_pow_minus(ring, lift->n, ring.one());
  RPoly g = poly::one(ring);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    g = poly::mulmod(ring, g, poly::powmod(ring, lift->factors[i], k[i], modulus), modulus);
  }
  return poly::rem(ring, g, modulus);
}

CyclicCodeCR make_code(std::shared_ptr<const LiftedFactorization> lift, std::vector<unsigned> k) {
  if (!lift) throw Error(Errc::InvalidArgument, "missing factorization");
  if (k.size() != lift->size()) throw Error(Errc::InvalidArgument, "one exponent per factor expected");
  for (unsigned ki : k) {
    if (ki > lift->ring.t()) throw Error(Errc::InvalidArgument, "exponent exceeds t");
  }
  return CyclicCodeCR{std::move(lift), std::move(k)};
}

namespace {

CyclicCodeCR dual_by(const CyclicCodeCR& code, const std::vector<std::size_t>& perm) {
  const unsigned t = code.lift->ring.t();
  std::vector<unsigned> k(code.k.size());
  for (std::size_t i = 0; i < code.k.size(); ++i) k[perm[i]] = t - code.k[i];
  return CyclicCodeCR{code.lift, std::move(k)};
}

}  // namespace

CyclicCodeCR hermitian_dual(const CyclicCodeCR& code) { return dual_by(code, code.lift->dagger_perm); }

bool is_hermitian_self_dual(const CyclicCodeCR& code) {
  const unsigned t = code.lift->ring.t();
  const auto& perm = code.lift->dagger_perm;
  for (std::size_t i = 0; i < code.k.size(); ++i) {
    if (code.k[i] + code.k[perm[i]] != t) return false;
  }
  return true;
}

CyclicCodeCR euclidean_dual(const CyclicCodeCR& code) {
  if (!code.lift->star_perm) {
    throw Error(Errc::Unsupported, "x^n - r0 is not closed under the reciprocal (r0^2 != 1)");
  }
  return dual_by(code, *code.lift->star_perm);
}

bool self_dual_exists(u64 q, u64 n, unsigned t) {
  nt::as_prime_power(q);
  require_lift_params(q, n, t);
  return t % 2 == 0;
}

BigInt count_self_dual(u64 q, u64 n, unsigned t) {
  if (!self_dual_exists(q, n, t)) return 0;
  return big_pow(t + 1, count_direct(q, n).lambda);
}

std::vector<CyclicCodeCR> enumerate_self_dual(std::shared_ptr<const LiftedFactorization> lift,
                                              const Budget& budget) {
  const unsigned t = lift->ring.t();
  if (t % 2 != 0) return {};
  std::vector<std::size_t> pair_heads;
  for (std::size_t i = 0; i < lift->size(); ++i) {
    if (i < lift->dagger_perm[i]) pair_heads.push_back(i);
  }
  const BigInt total = big_pow(t + 1, pair_heads.size());
  if (total > budget.max_enumeration) {
    throw Error(Errc::EnumerationTooLarge, std::to_string(t + 1) + "^" +
                                               std::to_string(pair_heads.size()) +
                                               " codes exceed the enumeration budget");
  }
  std::vector<CyclicCodeCR> out;
  std::vector<unsigned> digits(pair_heads.size(), 0);
  while (true) {
    std::vector<unsigned> k(lift->size(), t / 2);
    for (std::size_t b = 0; b < pair_heads.size(); ++b) {
      k[pair_heads[b]] = digits[b];
      k[lift->dagger_perm[pair_heads[b]]] = t - digits[b];
    }
    out.push_back(CyclicCodeCR{lift, std::move(k)});
    std::size_t b = pair_heads.size();
    while (b-- > 0) {
      if (++digits[b] <= t) break;
      digits[b] = 0;
    }
    if (b == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

bool oracle_within_budget(const LiftedFactorization& lift, const Budget& budget) {
  const BigInt states = big_pow(lift.ring.field().size(), static_cast<u64>(lift.ring.t()) * lift.n);
  return states <= (BigInt(1) << budget.max_oracle_bits);
}

OracleReport codeword_duality_oracle(const CyclicCodeCR& code, const Budget& budget) {
  const auto& ring = code.lift->ring;
  const std::size_t n = code.lift->n;
  const unsigned t = ring.t();
  if (!oracle_within_budget(*code.lift, budget)) {
    throw Error(Errc::OracleTooLarge, "(q^2)^(tn) exceeds 2^" + std::to_string(budget.max_oracle_bits));
  }

  const RPoly gen = code.generator();
  std::vector<std::vector<ChainRing::Elem>> shifts(n, std::vector<ChainRing::Elem>(n, ring.zero()));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t j = 0; j < gen.coeffs.size(); ++j) shifts[s][(j + s) % n] = gen.coeffs[j];
  }

  OracleReport report;
  report.formula_exponent = code.cardinality_exponent();
  report.self_orthogonal = true;
  for (std::size_t a = 0; a < n && report.self_orthogonal; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto acc = ring.zero();
      for (std::size_t l = 0; l < n; ++l) acc = ring.add(acc, ring.mul(shifts[a][l], ring.conj(shifts[b][l])));
      if (!ring.is_zero(acc)) {
        report.self_orthogonal = false;
        break;
      }
    }
  }

  // Column by column: the pivot of least valuation v contributes (q^2)^(t-v);
  // u^(t-v) times the pivot row stays in the module with a zero in this column.
  auto rows = std::move(shifts);
  u64 exponent = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = rows.size();
    unsigned best_v = t;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const unsigned v = ring.valuation(rows[r][col]);
      if (v < best_v) {
        best_v = v;
        best = r;
      }
    }
    if (best == rows.size()) continue;
    auto pivot = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    const auto unit_inv = ring.inv(ring.shift_down(pivot[col], best_v));
    for (auto& row : rows) {
      if (ring.is_zero(row[col])) continue;
      const auto factor = ring.mul(ring.shift_down(row[col], best_v), unit_inv);
      for (std::size_t l = col; l < n; ++l) row[l] = ring.sub(row[l], ring.mul(factor, pivot[l]));
    }
    exponent += t - best_v;
    if (best_v > 0) {
      const auto annihilator = ring.u_power(t - best_v);
      std::vector<ChainRing::Elem> extra(n);
      bool nonzero = false;
      for (std::size_t l = 0; l < n; ++l) {
        extra[l] = ring.mul(annihilator, pivot[l]);
        nonzero = nonzero || !ring.is_zero(extra[l]);
      }
      if (nonzero) rows.push_back(std::move(extra));
    }
    std::erase_if(rows, [&](const auto& row) {
      for (const auto& c : row) {
        if (!ring.is_zero(c)) return false;
      }
      return true;
    });
  }
  report.size_exponent = exponent;
  report.self_dual = report.self_orthogonal && 2 * exponent == static_cast<u64>(t) * n;
  return report;
}

}  // namespace scrimkit
