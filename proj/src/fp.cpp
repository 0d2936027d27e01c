#include "twistforge/fp.hpp"

#include <bit>
#include <string>

#include "twistforge/error.hpp"

namespace twistforge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 5 || p >= kMaxModulus || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument,
                "modulus must be a prime with 5 <= p < 2^31, got " + std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

Fp PrimeField::element(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp{static_cast<std::uint32_t>(r)};
}

Fp PrimeField::inv(Fp a) const {
  if (a.v == 0) throw Error(ErrorKind::ZeroInverse, "zero has no inverse mod " + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a.v;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return element(t0);
}

Fp PrimeField::pow(Fp a, std::uint64_t e, MultCounter& ctr) const noexcept {
  if (e == 0) return one();
  int top = 63 - std::countl_zero(e);
  Fp acc = a;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = mul(acc, acc, ctr);
    if ((e >> bit) & 1U) acc = mul(acc, a, ctr);
  }
  return acc;
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const noexcept {
  MultCounter scratch;
  return pow(a, e, scratch);
}

QuadraticCharacter PrimeField::euler_criterion(Fp w, MultCounter& ctr) const noexcept {
  if (w.v == 0) return QuadraticCharacter::zero;
  Fp t = pow(w, (p_ - 1) / 2, ctr);
  return t.v == 1 ? QuadraticCharacter::residue : QuadraticCharacter::nonresidue;
}

QuadraticCharacter PrimeField::euler_criterion(Fp w) const noexcept {
  MultCounter scratch;
  return euler_criterion(w, scratch);
}

std::optional<Fp> PrimeField::sqrt(Fp w) const {
  if (w.v == 0) return zero();
  if (euler_criterion(w) != QuadraticCharacter::residue) return std::nullopt;

  // p - 1 = q * 2^s with q odd.
  std::uint32_t q = p_ - 1;
  int s = 0;
  while ((q & 1U) == 0) {
    q >>= 1;
    ++s;
  }
  Fp z{2};
  while (euler_criterion(z) != QuadraticCharacter::nonresidue) z.v++;

  Fp c = pow(z, q);
  Fp x = pow(w, (q + 1) / 2);
  Fp t = pow(w, q);
  int m = s;
  while (t.v != 1) {
    int i = 0;
    Fp t2 = t;
    while (t2.v != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Fp b = c;
    for (int k = 0; k < m - i - 1; ++k) b = mul(b, b);
    x = mul(x, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  Fp other = neg(x);
  return other.v < x.v ? other : x;
}

SquareRootTable::SquareRootTable(const PrimeField& field) : roots_(field.modulus(), -1) {
  const std::uint32_t p = field.modulus();
  roots_[0] = 0;
  for (std::uint32_t x = 1; x <= p / 2; ++x) {
    Fp sq = field.mul(Fp{x}, Fp{x});
    roots_[sq.v] = static_cast<std::int32_t>(x);
  }
}

}  // namespace twistforge
