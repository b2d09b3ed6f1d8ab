#pragma once

// Dense univariate polynomials over a coefficient ring supplied as a context
// object. The same engine serves the prime field, F_{q^2}, its extensions and
// the chain ring F_{q^2}[u]/(u^t).

#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "scrimkit/error.hpp"
#include "scrimkit/numtheory.hpp"

namespace scrimkit {

template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::Elem& a) {
  { ring.zero() } -> std::convertible_to<typename R::Elem>;
  { ring.one() } -> std::convertible_to<typename R::Elem>;
  { ring.add(a, a) } -> std::convertible_to<typename R::Elem>;
  { ring.sub(a, a) } -> std::convertible_to<typename R::Elem>;
  { ring.neg(a) } -> std::convertible_to<typename R::Elem>;
  { ring.mul(a, a) } -> std::convertible_to<typename R::Elem>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { ring.is_unit(a) } -> std::convertible_to<bool>;
  { ring.inv(a) } -> std::convertible_to<typename R::Elem>;
};

/// Rings carrying the involution used by the conjugate-reciprocal map.
template <class R>
concept ConjugationRing = CoefficientRing<R> && requires(const R& ring, const typename R::Elem& a) {
  { ring.conj(a) } -> std::convertible_to<typename R::Elem>;
};

/// Finite fields whose order fits in 64 bits.
template <class F>
concept SmallFiniteField = CoefficientRing<F> && requires(const F& field) {
  { field.size() } -> std::convertible_to<std::uint64_t>;
};

/// Coefficients lowest degree first, never with a trailing zero. The zero
/// polynomial has no coefficients and degree kZeroDegree.
template <class R>
struct Poly {
  using Elem = typename R::Elem;
  static constexpr int kZeroDegree = -1;

  std::vector<Elem> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Elem& lead() const { return coeffs.back(); }
  bool operator==(const Poly&) const = default;
};

namespace poly {

template <CoefficientRing R>
void trim(const R& ring, Poly<R>& f) {
  while (!f.coeffs.empty() && ring.is_zero(f.coeffs.back())) f.coeffs.pop_back();
}

template <CoefficientRing R>
Poly<R> make(const R& ring, std::vector<typename R::Elem> coeffs) {
  Poly<R> f{std::move(coeffs)};
  trim(ring, f);
  return f;
}

template <CoefficientRing R>
Poly<R> constant(const R& ring, const typename R::Elem& c) {
  return make(ring, {c});
}

template <CoefficientRing R>
Poly<R> one(const R& ring) {
  return constant(ring, ring.one());
}

/// c * x^k
template <CoefficientRing R>
Poly<R> monomial(const R& ring, const typename R::Elem& c, std::size_t k) {
  std::vector<typename R::Elem> v(k + 1, ring.zero());
  v[k] = c;
  return make(ring, std::move(v));
}

/// x^n - c
template <CoefficientRing R>
Poly<R> x_pow_minus(const R& ring, std::size_t n, const typename R::Elem& c) {
  std::vector<typename R::Elem> v(n + 1, ring.zero());
  v[n] = ring.one();
  v[0] = ring.sub(v[0], c);
  return make(ring, std::move(v));
}

template <CoefficientRing R>
Poly<R> add(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  const auto& longer = f.coeffs.size() >= g.coeffs.size() ? f : g;
  const auto& shorter = f.coeffs.size() >= g.coeffs.size() ? g : f;
  Poly<R> h = longer;
  for (std::size_t i = 0; i < shorter.coeffs.size(); ++i) {
    h.coeffs[i] = ring.add(h.coeffs[i], shorter.coeffs[i]);
  }
  trim(ring, h);
  return h;
}

template <CoefficientRing R>
Poly<R> neg(const R& ring, const Poly<R>& f) {
  Poly<R> h = f;
  for (auto& c : h.coeffs) c = ring.neg(c);
  return h;
}

template <CoefficientRing R>
Poly<R> sub(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  return add(ring, f, neg(ring, g));
}

template <CoefficientRing R>
Poly<R> scale(const R& ring, const typename R::Elem& c, const Poly<R>& f) {
  Poly<R> h = f;
  for (auto& a : h.coeffs) a = ring.mul(c, a);
  trim(ring, h);
  return h;
}

template <CoefficientRing R>
Poly<R> mul(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<typename R::Elem> v(f.coeffs.size() + g.coeffs.size() - 1, ring.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (ring.is_zero(f.coeffs[i])) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      v[i + j] = ring.add(v[i + j], ring.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return make(ring, std::move(v));
}

template <CoefficientRing R>
Poly<R> pow(const R& ring, const Poly<R>& f, std::uint64_t k) {
  Poly<R> result = one(ring);
  Poly<R> base = f;
  while (k) {
    if (k & 1) result = mul(ring, result, base);
    k >>= 1;
    if (k) base = mul(ring, base, base);
  }
  return result;
}

/// Euclidean division; the divisor's leading coefficient must be a unit.
template <CoefficientRing R>
std::pair<Poly<R>, Poly<R>> divmod(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (!ring.is_unit(g.lead())) {
    throw Error(Errc::NonUnitLeadingCoefficient, "divisor leading coefficient is not a unit");
  }
  if (f.degree() < g.degree()) return {Poly<R>{}, f};
  const auto lead_inv = ring.inv(g.lead());
  std::vector<typename R::Elem> rem = f.coeffs;
  const std::size_t dg = g.coeffs.size() - 1;
  std::vector<typename R::Elem> quo(rem.size() - dg, ring.zero());
  for (std::size_t i = rem.size(); i-- > dg;) {
    const auto c = ring.mul(rem[i], lead_inv);
    if (ring.is_zero(c)) continue;
    quo[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) {
      rem[i - dg + j] = ring.sub(rem[i - dg + j], ring.mul(c, g.coeffs[j]));
    }
  }
  rem.resize(dg);
  return {make(ring, std::move(quo)), make(ring, std::move(rem))};
}

template <CoefficientRing R>
Poly<R> rem(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  return divmod(ring, f, g).second;
}

template <CoefficientRing R>
bool divides(const R& ring, const Poly<R>& g, const Poly<R>& f) {
  return rem(ring, f, g).is_zero();
}

template <CoefficientRing R>
Poly<R> mulmod(const R& ring, const Poly<R>& f, const Poly<R>& g, const Poly<R>& m) {
  return rem(ring, mul(ring, f, g), m);
}

template <CoefficientRing R>
Poly<R> powmod(const R& ring, const Poly<R>& f, std::uint64_t k, const Poly<R>& m) {
  Poly<R> result = rem(ring, one(ring), m);
  Poly<R> base = rem(ring, f, m);
  while (k) {
    if (k & 1) result = mulmod(ring, result, base, m);
    k >>= 1;
    if (k) base = mulmod(ring, base, base, m);
  }
  return result;
}

template <CoefficientRing R>
Poly<R> monic(const R& ring, const Poly<R>& f) {
  if (f.is_zero()) return f;
  return scale(ring, ring.inv(f.lead()), f);
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <CoefficientRing R>
Poly<R> gcd(const R& ring, Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    auto r = rem(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ring, a);
}

template <CoefficientRing R>
struct Bezout {
  Poly<R> gcd;  // monic
  Poly<R> s;
  Poly<R> t;    // s*a + t*b = gcd
};

template <CoefficientRing R>
Bezout<R> ext_gcd(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = one(ring), s1{};
  Poly<R> t0{}, t1 = one(ring);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(ring, r0, r1);
    auto s2 = sub(ring, s0, mul(ring, q, s1));
    auto t2 = sub(ring, t0, mul(ring, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto c = ring.inv(r0.lead());
  return {scale(ring, c, r0), scale(ring, c, s0), scale(ring, c, t0)};
}

/// Inverse of f modulo m over a field; throws if they are not coprime.
template <CoefficientRing R>
Poly<R> inverse_mod(const R& ring, const Poly<R>& f, const Poly<R>& m) {
  auto bz = ext_gcd(ring, rem(ring, f, m), m);
  if (bz.gcd.degree() != 0) throw Error(Errc::InvalidArgument, "polynomial is not invertible modulo m");
  return rem(ring, bz.s, m);
}

template <CoefficientRing R>
typename R::Elem eval(const R& ring, const Poly<R>& f, const typename R::Elem& a) {
  auto acc = ring.zero();
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = ring.add(ring.mul(acc, a), f.coeffs[i]);
  return acc;
}

template <CoefficientRing R>
typename R::Elem constant_term(const R& ring, const Poly<R>& f) {
  return f.is_zero() ? ring.zero() : f.coeffs.front();
}

/// f*(x) = x^deg(f) f(0)^{-1} f(1/x)
template <CoefficientRing R>
Poly<R> reciprocal_star(const R& ring, const Poly<R>& f) {
  if (f.is_zero() || !ring.is_unit(f.coeffs.front())) {
    throw Error(Errc::NonUnitConstantTerm, "reciprocal needs a unit constant term");
  }
  std::vector<typename R::Elem> v(f.coeffs.rbegin(), f.coeffs.rend());
  return scale(ring, ring.inv(f.coeffs.front()), make(ring, std::move(v)));
}

template <ConjugationRing R>
Poly<R> conjugate(const R& ring, const Poly<R>& f) {
  Poly<R> h = f;
  for (auto& c : h.coeffs) c = ring.conj(c);
  return h;
}

/// f-dagger: the coefficientwise conjugate of f*.
template <ConjugationRing R>
Poly<R> dagger(const R& ring, const Poly<R>& f) {
  return conjugate(ring, reciprocal_star(ring, f));
}

/// Distinct-degree criterion: with s = |F| and d = deg f, f is irreducible iff
/// x^(s^d) = x mod f and gcd(x^(s^(d/l)) - x, f) = 1 for every prime l | d.
/// Candidates with a factor of degree k <= d/2 are rejected as soon as
/// gcd(x^(s^k) - x, f) != 1.
template <SmallFiniteField F>
bool is_irreducible(const F& field, const Poly<F>& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly<F> m = monic(field, f);
  const Poly<F> x = monomial(field, field.one(), 1);
  const auto s = static_cast<std::uint64_t>(field.size());

  std::vector<Poly<F>> frob{x};  // frob[k] = x^(s^k) mod m
  frob.reserve(d + 1);
  for (int k = 1; k <= d; ++k) {
    frob.push_back(powmod(field, frob.back(), s, m));
    if (2 * k <= d && gcd(field, sub(field, frob[k], x), m).degree() != 0) return false;
  }
  if (frob[d] != rem(field, x, m)) return false;
  for (auto l : nt::factor(static_cast<std::uint64_t>(d)).primes()) {
    auto g = gcd(field, sub(field, frob[d / l], x), m);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace poly
}  // namespace scrimkit
