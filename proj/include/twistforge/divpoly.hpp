#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "twistforge/curves.hpp"
#include "twistforge/fp.hpp"

namespace twistforge {

/// Element c * y^parity of F_p[y]/(y^2 - w). Zero is always stored with
/// parity 0.
struct TwistedValue {
  Fp c;
  std::uint8_t parity = 0;

  static TwistedValue make(Fp c, int parity) {
    return {c, static_cast<std::uint8_t>(c.v == 0 ? 0 : (parity & 1))};
  }
  bool is_zero() const noexcept { return c.v == 0; }

  friend bool operator==(const TwistedValue&, const TwistedValue&) = default;
};

/// Evaluation point (A, B, x) with the cached powers the division
/// polynomials need; w = x^3 + A x + B.
struct Ambient {
  Fp A;
  Fp B;
  Fp x;
  Fp x2;
  Fp x3;
  Fp w;
};

/// Costs three multiplications.
Ambient make_ambient(const PrimeField& field, const WeierstrassCurve& E, Fp x, MultCounter& ctr);
Ambient make_ambient(const PrimeField& field, const WeierstrassCurve& E, Fp x);

// Ring operations in F_p[y]/(y^2 - w). Products cost one multiplication,
// plus one more when both factors carry y.
TwistedValue tv_mul(const PrimeField& field, const Ambient& amb, TwistedValue a, TwistedValue b,
                    MultCounter& ctr);
/// Throws Error(ParityMismatch) when both operands are nonzero with different parities.
TwistedValue tv_add(const PrimeField& field, TwistedValue a, TwistedValue b);
TwistedValue tv_sub(const PrimeField& field, TwistedValue a, TwistedValue b);

/// Parity carried by a nonzero psi_n: 1 exactly for even n.
constexpr int psi_parity(std::int64_t n) { return n % 2 == 0 ? 1 : 0; }

inline constexpr int kMinBaseIndex = -1;
inline constexpr int kMaxBaseIndex = 14;
inline constexpr int kWindowSize = 10;

/// psi_n for n in [-1, 14]; 5 <= n <= 14 go through g1/g2. Throws
/// Error(IndexOutOfRange) otherwise.
TwistedValue base_psi(const PrimeField& field, const Ambient& amb, int n, MultCounter& ctr);

/// psi_{-1} .. psi_{max_index}; element i holds psi_{i-1}.
std::vector<TwistedValue> base_psi_table(const PrimeField& field, const Ambient& amb, int max_index,
                                         MultCounter& ctr);

/// psi_{2n+1} = psi_{n+2} psi_n^3 - psi_{n-1} psi_{n+1}^3 from
/// (psi_{n-1}, psi_n, psi_{n+1}, psi_{n+2}). At most 8 multiplications.
TwistedValue g1(const PrimeField& field, const Ambient& amb, std::span<const TwistedValue, 4> v,
                MultCounter& ctr);

/// psi_{2n} = psi_n (psi_{n+2} psi_{n-1}^2 - psi_{n-2} psi_{n+1}^2) / (2y) from
/// (psi_{n-2}, ..., psi_{n+2}). Both products inside the bracket carry y^2
/// relative to psi_n, so the quotient by 2y only costs a halving: the
/// coefficient is c_n (c_{n-1}^2 c_{n+2} - c_{n-2} c_{n+1}^2) / 2 with parity 1.
/// At most 6 multiplications. Throws Error(TwoTorsionAmbient) when w = 0.
TwistedValue g2(const PrimeField& field, const Ambient& amb, std::span<const TwistedValue, 5> v,
                MultCounter& ctr);

/// (psi_k, ..., psi_{k+9}).
struct PsiWindow {
  std::int64_t base = 0;
  std::array<TwistedValue, kWindowSize> entries{};
};

/// Window at base k in [-1, 5], built from base_psi.
PsiWindow base_window(const PrimeField& field, const Ambient& amb, int k, MultCounter& ctr);

/// Branch 1 maps base k to 2k+4, branch 2 to 2k+5. Every output entry is one
/// g1 or g2 call, so the cost is at most 80 multiplications.
PsiWindow window_double(const PrimeField& field, const Ambient& amb, const PsiWindow& win,
                        int branch, MultCounter& ctr);

/// sigmas[0] = sigma > sigmas[1] > ... > sigmas[r] with sigmas[r] <= 5.
/// Applying branch_bits[0], ..., branch_bits[r-1] to the window at sigmas[r]
/// walks back up to sigma.
struct DoublingSchedule {
  std::vector<std::uint64_t> sigmas;
  std::vector<int> branch_bits;

  std::size_t rounds() const noexcept { return branch_bits.size(); }
};

/// Throws Error(InvalidArgument) for sigma = 0.
DoublingSchedule make_schedule(std::uint64_t sigma);

/// psi_ell(A, B, x) via the doubling schedule. Throws
/// Error(TwoTorsionAmbient) when w = 0 and Error(InvalidArgument) for ell = 0.
TwistedValue eval_division_poly(const PrimeField& field, const Ambient& amb, std::uint64_t ell,
                                MultCounter& ctr);
TwistedValue eval_division_poly(const PrimeField& field, const WeierstrassCurve& E, Fp x,
                                std::uint64_t ell, MultCounter& ctr);

/// psi_ell(P) = 0 for a point P with x-coordinate amb.x. When w = 0 the
/// point has order 2, so the answer is ell even without any evaluation.
bool division_poly_vanishes(const PrimeField& field, const Ambient& amb, std::uint64_t ell,
                            MultCounter& ctr);

}  // namespace twistforge
