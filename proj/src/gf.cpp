#include "scrimkit/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace scrimkit {

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZeroPoly, "zero has no inverse");
  return nt::powmod(a, p_ - 2, p_);
}

// ---------------------------------------------------------------------------
// F_{q^2}

namespace {

constexpr u64 kTableLimit = 1u << 20;
constexpr u64 kAddTableLimit = 256;

}  // namespace

struct FieldSpec::Data {
  u64 p = 2;
  unsigned e = 1;
  u64 q = 2;
  u64 size = 4;
  unsigned degree = 2;
  PrimeField fp{2};
  FpPoly modulus;
  std::vector<u64> place;  // p^i

  bool tabled = false;
  std::vector<std::uint32_t> exp;  // length size - 1
  std::vector<std::uint32_t> log;  // length size, log[0] unused
  std::vector<std::uint32_t> add;  // size * size when small
  nt::FactoredInteger group_order;  // size - 1

  std::vector<u64> digits(u64 code) const {
    std::vector<u64> out(degree);
    for (unsigned i = 0; i < degree; ++i) {
      out[i] = code % p;
      code /= p;
    }
    return out;
  }
  u64 encode(const std::vector<u64>& digits) const {
    u64 code = 0;
    for (unsigned i = degree; i-- > 0;) code = code * p + digits[i];
    return code;
  }
};

FieldSpec FieldSpec::build(u64 p, unsigned e, u64 size_limit) {
  if (!nt::is_prime(p)) {
    throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (e == 0) throw Error(Errc::InvalidArgument, "e must be positive");
  u64 size = 0;
  if (!nt::checked_pow(p, 2 * e, size) || size > size_limit) {
    throw Error(Errc::SizeLimitExceeded,
                std::to_string(p) + "^" + std::to_string(2 * e) + " exceeds the field size limit");
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->q = 1;
  nt::checked_pow(p, e, d->q);
  d->size = size;
  d->degree = 2 * e;
  d->fp = PrimeField(p);
  d->place.resize(d->degree);
  for (unsigned i = 0; i < d->degree; ++i) nt::checked_pow(p, i, d->place[i]);

  d->modulus = lex_least_irreducible(d->fp, d->degree, [](u64 r) { return r; });
  d->group_order = nt::factor(size - 1);

  FieldSpec generic(d);
  if (size <= kTableLimit) {
    // Logarithm tables from the first generator in code order.
    u64 g = 1;
    for (; g < size; ++g) {
      if (generic.element_order(Gf{g}) == size - 1) break;
    }
    d->exp.resize(size - 1);
    d->log.assign(size, 0);
    Gf x{1};
    for (u64 i = 0; i + 1 < size; ++i) {
      d->exp[i] = static_cast<std::uint32_t>(x.code);
      d->log[x.code] = static_cast<std::uint32_t>(i);
      x = generic.mul_generic(x, Gf{g});
    }
    if (size <= kAddTableLimit && p != 2) {
      std::vector<std::uint32_t> table(size * size);
      for (u64 a = 0; a < size; ++a) {
        for (u64 b = 0; b < size; ++b) {
          table[a * size + b] = static_cast<std::uint32_t>(generic.add(Gf{a}, Gf{b}).code);
        }
      }
      d->add = std::move(table);
    }
    d->tabled = true;
  }
  return FieldSpec(d);
}

FieldSpec FieldSpec::for_q(u64 q) {
  auto pp = nt::as_prime_power(q);
  return build(pp.prime, pp.exponent);
}

u64 FieldSpec::p() const { return d_->p; }
unsigned FieldSpec::e() const { return d_->e; }
u64 FieldSpec::q() const { return d_->q; }
u64 FieldSpec::size() const { return d_->size; }
const FpPoly& FieldSpec::modulus() const { return d_->modulus; }
const PrimeField& FieldSpec::prime_field() const { return d_->fp; }

bool FieldSpec::operator==(const FieldSpec& other) const {
  return d_ == other.d_ || (d_->p == other.d_->p && d_->e == other.d_->e);
}

Gf FieldSpec::add(Gf a, Gf b) const {
  const Data& d = *d_;
  if (d.p == 2) return Gf{a.code ^ b.code};
  if (!d.add.empty()) return Gf{d.add[a.code * d.size + b.code]};
  u64 out = 0;
  for (unsigned i = 0; i < d.degree; ++i) {
    const u64 x = a.code % d.p, y = b.code % d.p;
    out += d.fp.add(x, y) * d.place[i];
    a.code /= d.p;
    b.code /= d.p;
  }
  return Gf{out};
}

Gf FieldSpec::neg(Gf a) const {
  const Data& d = *d_;
  if (d.p == 2) return a;
  u64 out = 0;
  for (unsigned i = 0; i < d.degree; ++i) {
    out += d.fp.neg(a.code % d.p) * d.place[i];
    a.code /= d.p;
  }
  return Gf{out};
}

Gf FieldSpec::mul_generic(Gf a, Gf b) const {
  const Data& d = *d_;
  FpPoly fa = poly::make(d.fp, d.digits(a.code));
  FpPoly fb = poly::make(d.fp, d.digits(b.code));
  FpPoly r = poly::mulmod(d.fp, fa, fb, d.modulus);
  r.coeffs.resize(d.degree, 0);
  return Gf{d.encode(r.coeffs)};
}

Gf FieldSpec::mul(Gf a, Gf b) const {
  if (a.code == 0 || b.code == 0) return Gf{0};
  const Data& d = *d_;
  if (d.tabled) {
    u64 s = u64{d.log[a.code]} + d.log[b.code];
    if (s >= d.size - 1) s -= d.size - 1;
    return Gf{d.exp[s]};
  }
  return mul_generic(a, b);
}

Gf FieldSpec::pow(Gf a, u64 k) const {
  if (k == 0) return one();
  if (a.code == 0) return zero();
  const Data& d = *d_;
  if (d.tabled) {
    const u64 s = nt::mulmod(d.log[a.code], k % (d.size - 1), d.size - 1);
    return Gf{d.exp[s]};
  }
  Gf result = one();
  while (k) {
    if (k & 1) result = mul(result, a);
    k >>= 1;
    if (k) a = mul(a, a);
  }
  return result;
}

Gf FieldSpec::inv(Gf a) const {
  if (a.code == 0) throw Error(Errc::DivisionByZeroPoly, "zero has no inverse");
  const Data& d = *d_;
  if (d.tabled) {
    const u64 l = d.log[a.code];
    return Gf{d.exp[l == 0 ? 0 : d.size - 1 - l]};
  }
  return pow(a, d.size - 2);
}

Gf FieldSpec::from_coeffs(std::span<const u64> coeffs) const {
  const Data& d = *d_;
  if (coeffs.size() > d.degree) throw Error(Errc::InvalidArgument, "too many coordinates");
  std::vector<u64> digits(d.degree, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) digits[i] = coeffs[i] % d.p;
  return Gf{d.encode(digits)};
}

std::vector<u64> FieldSpec::coeffs(Gf a) const { return d_->digits(a.code); }

u64 FieldSpec::element_order(Gf a) const {
  if (a.code == 0) throw Error(Errc::ZeroHasNoOrder, "zero has no multiplicative order");
  const Data& d = *d_;
  u64 order = d.size - 1;
  for (const auto& [prime, exp] : d.group_order.factors) {
    for (unsigned i = 0; i < exp && pow(a, order / prime) == one(); ++i) order /= prime;
  }
  return order;
}

u64 FieldSpec::lex_rank(Gf a) const {
  // c_0 is the most significant digit of the rank.
  const auto digits = coeffs(a);
  u64 rank = 0;
  for (u64 c : digits) rank = rank * d_->p + c;
  return rank;
}

Gf FieldSpec::lex_unrank(u64 rank) const {
  const Data& d = *d_;
  std::vector<u64> digits(d.degree);
  for (unsigned i = d.degree; i-- > 0;) {
    digits[i] = rank % d.p;
    rank /= d.p;
  }
  return Gf{d.encode(digits)};
}

std::string FieldSpec::format(Gf a) const {
  if (a.code == 0) return "0";
  const auto digits = coeffs(a);
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const u64 c = digits[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "w";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// F_{(q^2)^m} = F_{q^2}[y]/(N)

ExtensionField::ExtensionField(FieldSpec base, FPoly modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || modulus_.lead() != base_.one()) {
    throw Error(Errc::InvalidArgument, "extension modulus must be monic of positive degree");
  }
  m_ = static_cast<unsigned>(modulus_.degree());
}

ExtensionField ExtensionField::lex_least(const FieldSpec& base, unsigned m) {
  return ExtensionField(base, lex_least_irreducible(base, m, [&](u64 r) { return base.lex_unrank(r); }));
}

BigInt ExtensionField::size() const { return big_pow(base_.size(), m_); }

ExtensionField::Elem ExtensionField::one() const {
  Elem out = zero();
  out[0] = base_.one();
  return out;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
  Elem out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = base_.add(a[i], b[i]);
  return out;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
  Elem out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = base_.sub(a[i], b[i]);
  return out;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const {
  Elem out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = base_.neg(a[i]);
  return out;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
  std::vector<Gf> prod(2 * m_ - 1, Gf{0});
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i].code == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      if (b[j].code == 0) continue;
      prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
  }
  // N is monic: y^m = -(N - y^m).
  for (std::size_t i = prod.size(); i-- > m_;) {
    const Gf c = prod[i];
    if (c.code == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i - m_ + j] = base_.sub(prod[i - m_ + j], base_.mul(c, modulus_.coeffs[j]));
    }
  }
  prod.resize(m_);
  return prod;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(Errc::DivisionByZeroPoly, "zero has no inverse");
  FPoly fa = poly::make(base_, a);
  FPoly r = poly::inverse_mod(base_, fa, modulus_);
  r.coeffs.resize(m_, base_.zero());
  return r.coeffs;
}

ExtensionField::Elem ExtensionField::pow(const Elem& a, const BigInt& k) const {
  if (k == 0) return one();
  Elem result = one();
  const auto bits = boost::multiprecision::msb(k);
  for (std::size_t i = bits + 1; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i))) result = mul(result, a);
  }
  return result;
}

bool ExtensionField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](Gf c) { return c.code == 0; });
}

ExtensionField::Elem ExtensionField::embed(Gf a) const {
  Elem out = zero();
  out[0] = a;
  return out;
}

bool ExtensionField::in_base(const Elem& a) const {
  return std::all_of(a.begin() + 1, a.end(), [](Gf c) { return c.code == 0; });
}

u64 ExtensionField::element_order(const Elem& a) const {
  if (is_zero(a)) throw Error(Errc::ZeroHasNoOrder, "zero has no multiplicative order");
  const BigInt s = size();
  if (s - 1 > std::numeric_limits<u64>::max()) {
    throw Error(Errc::SizeLimitExceeded, "extension field too large for element_order");
  }
  const u64 group = static_cast<u64>(s - 1);
  u64 order = group;
  for (const auto& [prime, exp] : nt::factor(group).factors) {
    for (unsigned i = 0; i < exp && pow(a, order / prime) == one(); ++i) order /= prime;
  }
  return order;
}

ExtensionField::Elem ExtensionField::lex_unrank(const std::vector<u64>& ranks) const {
  Elem out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = base_.lex_unrank(ranks[i]);
  return out;
}

PrimitiveRoot primitive_nth_root(const FieldSpec& field, u64 n, unsigned max_degree) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  if (n % field.p() == 0) {
    throw Error(Errc::CharacteristicDividesN,
                "characteristic " + std::to_string(field.p()) + " divides " + std::to_string(n));
  }
  const u64 m = nt::mult_order(field.size() % n, n);
  if (m > max_degree) {
    throw Error(Errc::SizeLimitExceeded, "extension degree " + std::to_string(m) +
                                             " exceeds the limit " + std::to_string(max_degree));
  }
  ExtensionField big = ExtensionField::lex_least(field, static_cast<unsigned>(m));
  const BigInt exponent = (big.size() - 1) / n;
  const auto primes = nt::factor(n).primes();

  std::vector<u64> ranks(m, 0);
  while (true) {
    std::size_t i = m;
    while (i-- > 0) {
      if (++ranks[i] < field.size()) break;
      ranks[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) {
      throw Error(Errc::Internal, "no primitive root of unity found");
    }
    const auto beta = big.lex_unrank(ranks);
    const auto alpha = big.pow(beta, exponent);
    const bool exact = std::none_of(primes.begin(), primes.end(), [&](u64 l) {
      return big.pow(alpha, n / l) == big.one();
    });
    if (exact) {
      auto image = big.embed(field.generator());
      ExtensionCtx ctx{field, static_cast<unsigned>(m), big, image};
      return PrimitiveRoot{std::move(ctx), alpha, n};
    }
  }
}

}  // namespace scrimkit
