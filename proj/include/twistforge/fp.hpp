#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace twistforge {

/// Residue modulo the prime of the surrounding PrimeField, kept in [0, p).
struct Fp {
  std::uint32_t v = 0;

  friend bool operator==(Fp, Fp) = default;
};

/// Number of F_p multiplications performed. Squarings count as
/// multiplications, additions are free.
struct MultCounter {
  std::uint64_t count = 0;

  void tick(std::uint64_t n = 1) noexcept { count += n; }

  MultCounter& merge(const MultCounter& other) noexcept {
    count += other.count;
    return *this;
  }

  friend MultCounter operator+(MultCounter a, const MultCounter& b) noexcept { return a.merge(b); }
  friend bool operator==(const MultCounter&, const MultCounter&) = default;
};

enum class QuadraticCharacter { zero, residue, nonresidue };

bool is_prime(std::uint64_t n);

/// Arithmetic context for an odd prime 5 <= p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  /// Throws Error(InvalidArgument) unless p is a prime with 5 <= p < 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Fp element(std::int64_t value) const noexcept;
  Fp zero() const noexcept { return Fp{0}; }
  Fp one() const noexcept { return Fp{1}; }

  Fp add(Fp a, Fp b) const noexcept {
    std::uint32_t s = a.v + b.v;
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const noexcept { return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
  Fp neg(Fp a) const noexcept { return Fp{a.v == 0 ? 0 : p_ - a.v}; }

  Fp mul(Fp a, Fp b, MultCounter& ctr) const noexcept {
    ctr.tick();
    return mul(a, b);
  }
  /// Uncounted product, for plumbing outside the audited paths.
  Fp mul(Fp a, Fp b) const noexcept {
    return Fp{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
  }

  /// Extended-Euclid inverse. Throws Error(ZeroInverse) for a = 0.
  Fp inv(Fp a) const;

  /// Left-to-right square-and-multiply; 0^0 = 1. Performs at most
  /// 2*floor(log2 e) multiplications.
  Fp pow(Fp a, std::uint64_t e, MultCounter& ctr) const noexcept;
  Fp pow(Fp a, std::uint64_t e) const noexcept;

  /// w^((p-1)/2) classification, counted.
  QuadraticCharacter euler_criterion(Fp w, MultCounter& ctr) const noexcept;
  QuadraticCharacter euler_criterion(Fp w) const noexcept;

  /// Tonelli-Shanks; returns the smaller of the two roots, or nullopt for a
  /// nonresidue.
  std::optional<Fp> sqrt(Fp w) const;

  /// (p+1)/2, the inverse of 2.
  Fp half() const noexcept { return Fp{(p_ + 1) / 2}; }

  /// Signed representative in (-p/2, p/2].
  std::int64_t centered(Fp a) const noexcept {
    return a.v > p_ / 2 ? static_cast<std::int64_t>(a.v) - p_ : static_cast<std::int64_t>(a.v);
  }

 private:
  std::uint32_t p_;
};

/// Dense table of square roots for every residue of a desk-scale field.
/// root(w) is the smaller root or -1 for a nonresidue.
class SquareRootTable {
 public:
  explicit SquareRootTable(const PrimeField& field);

  QuadraticCharacter character(Fp w) const noexcept {
    if (w.v == 0) return QuadraticCharacter::zero;
    return roots_[w.v] >= 0 ? QuadraticCharacter::residue : QuadraticCharacter::nonresidue;
  }
  std::optional<Fp> sqrt(Fp w) const noexcept {
    std::int32_t r = roots_[w.v];
    if (r < 0) return std::nullopt;
    return Fp{static_cast<std::uint32_t>(r)};
  }
  /// chi(w) in {-1, 0, 1}.
  int chi(Fp w) const noexcept {
    if (w.v == 0) return 0;
    return roots_[w.v] >= 0 ? 1 : -1;
  }

 private:
  std::vector<std::int32_t> roots_;
};

}  // namespace twistforge
