#include "scrimkit/hlcd.hpp"

#include <string>

namespace scrimkit {

namespace {

using Matrix = std::vector<std::vector<Gf>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FieldSpec& F, Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && F.is_zero(a[sel][col])) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Gf s = F.inv(a[row][col]);
    for (auto& v : a[row]) v = F.mul(v, s);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || F.is_zero(a[r][col])) continue;
      const Gf c = a[r][col];
      for (std::size_t k = col; k < cols; ++k) a[r][k] = F.sub(a[r][k], F.mul(c, a[row][k]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of {v : a v = 0}.
Matrix nullspace(const FieldSpec& F, Matrix a, std::size_t cols) {
  const auto pivots = rref(F, a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Gf> v(cols, F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

BigInt count_hermitian_lcd(u64 q, u64 n) {
  const u64 p = nt::as_prime_power(q).prime;
  u64 n_prime = n;
  while (n_prime % p == 0) n_prime /= p;
  const auto counts = count_direct(q, n_prime);
  return BigInt(1) << static_cast<unsigned>(counts.omega + counts.lambda);
}

namespace {

u64 p_power_part(u64 p, u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  u64 part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

}  // namespace

HermitianLcd::HermitianLcd(FieldSpec field, u64 n)
    : field_(std::move(field)),
      n_(n),
      multiplicity_(p_power_part(field_.p(), n)),
      base_(factor_xn_minus_1(field_, n / multiplicity_)),
      xn_minus_1_(poly::x_pow_minus(field_, n, field_.one())) {}

CyclicCodeGF HermitianLcd::make_code(const FPoly& generator) const {
  if (generator.is_zero() || generator.lead() != field_.one()) {
    throw Error(Errc::InvalidArgument, "generator must be monic");
  }
  if (!poly::divides(field_, generator, xn_minus_1_)) {
    throw Error(Errc::InvalidArgument, "generator does not divide x^n - 1");
  }
  return CyclicCodeGF{field_.q(), n_, generator};
}

CyclicCodeGF HermitianLcd::code_from_multiplicities(const std::vector<u64>& exponents) const {
  if (exponents.size() != base_.factors.size()) {
    throw Error(Errc::InvalidArgument, "one exponent per irreducible factor expected");
  }
  FPoly g = poly::one(field_);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > multiplicity_) throw Error(Errc::InvalidArgument, "exponent exceeds p^nu");
    if (exponents[i] > 0) g = poly::mul(field_, g, poly::pow(field_, base_.factors[i].poly, exponents[i]));
  }
  return CyclicCodeGF{field_.q(), n_, std::move(g)};
}

std::vector<u64> HermitianLcd::multiplicities(const FPoly& g) const {
  std::vector<u64> out;
  out.reserve(base_.factors.size());
  for (const auto& f : base_.factors) {
    u64 k = 0;
    FPoly rest = g;
    while (true) {
      auto [quo, r] = poly::divmod(field_, rest, f.poly);
      if (!r.is_zero()) break;
      rest = std::move(quo);
      ++k;
    }
    out.push_back(k);
  }
  return out;
}

FPoly HermitianLcd::hermitian_dual_generator(const CyclicCodeGF& code) const {
  auto [h, r] = poly::divmod(field_, xn_minus_1_, code.generator);
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "generator does not divide x^n - 1");
  return poly::monic(field_, poly::dagger(field_, h));
}

bool HermitianLcd::gcd_test(const CyclicCodeGF& code) const {
  const auto g = poly::gcd(field_, code.generator, hermitian_dual_generator(code));
  return g.degree() == 0;
}

bool HermitianLcd::dagger_test(const CyclicCodeGF& code) const {
  if (poly::dagger(field_, code.generator) != code.generator) return false;
  for (u64 k : multiplicities(code.generator)) {
    if (k != 0 && k != multiplicity_) return false;
  }
  return true;
}

bool HermitianLcd::intersection_oracle(const CyclicCodeGF& code, const Budget& budget) const {
  if (n_ > budget.max_intersection_length) {
    throw Error(Errc::OracleTooLarge, "intersection oracle refused for n = " + std::to_string(n_));
  }
  const std::size_t n = n_;
  const std::size_t k = code.dimension();
  if (k == 0 || k == n) return true;

  Matrix gen(k, std::vector<Gf>(n, field_.zero()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < code.generator.coeffs.size(); ++j) gen[i][i + j] = code.generator.coeffs[j];
  }
  // C^⊥H = {v : sum_j v_j conj(c_j) = 0 for every row c} = ker(conj(G)).
  Matrix conj_gen = gen;
  for (auto& row : conj_gen) {
    for (auto& v : row) v = field_.conj(v);
  }
  Matrix dual = nullspace(field_, conj_gen, n);
  if (dual.size() != n - k) throw Error(Errc::Internal, "generator matrix is not of full rank");

  Matrix stacked = gen;
  stacked.insert(stacked.end(), dual.begin(), dual.end());
  return rref(field_, stacked, n).size() == n;
}

LcdVerdict HermitianLcd::is_hermitian_lcd(const CyclicCodeGF& code, const Budget& budget) const {
  LcdVerdict verdict;
  verdict.gcd_test = gcd_test(code);
  verdict.dagger_test = dagger_test(code);
  if (n_ <= budget.max_intersection_length) verdict.intersection = intersection_oracle(code, budget);
  return verdict;
}

BigInt HermitianLcd::count() const {
  return BigInt(1) << static_cast<unsigned>(base_.omega.size() + base_.lambda_pairs.size());
}

std::vector<CyclicCodeGF> HermitianLcd::enumerate(const Budget& budget) const {
  // Units: every SCRIM factor alone, every CRIM pair together.
  std::vector<std::vector<std::size_t>> units;
  for (std::size_t i = 0; i < base_.factors.size(); ++i) {
    const auto& f = base_.factors[i];
    if (f.scrim) {
      units.push_back({i});
    } else if (i < f.partner) {
      units.push_back({i, f.partner});
    }
  }
  if (units.size() >= 63 || (u64{1} << units.size()) > budget.max_enumeration) {
    throw Error(Errc::EnumerationTooLarge,
                "2^" + std::to_string(units.size()) + " codes exceed the enumeration budget");
  }
  std::vector<CyclicCodeGF> out;
  const u64 total = u64{1} << units.size();
  out.reserve(total);
  for (u64 mask = 0; mask < total; ++mask) {
    std::vector<u64> exponents(base_.factors.size(), 0);
    for (std::size_t b = 0; b < units.size(); ++b) {
      if ((mask >> b) & 1) {
        for (auto idx : units[b]) exponents[idx] = multiplicity_;
      }
    }
    out.push_back(code_from_multiplicities(exponents));
  }
  return out;
}

}  // namespace scrimkit
