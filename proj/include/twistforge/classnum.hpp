#pragma once

#include <cstdint>
#include <optional>

namespace twistforge {

/// Negative discriminant d = 0 or 1 mod 4.
struct Discriminant {
  std::int64_t d = 0;
  /// d is the discriminant of a maximal order.
  bool is_fundamental = false;
  /// |d| square-free when d = 1 mod 4, |d|/4 square-free when d = 0 mod 4.
  bool is_squarefree = false;

  std::uint64_t abs() const noexcept { return static_cast<std::uint64_t>(-d); }
};

/// Throws Error(InvalidArgument) unless d < 0 and d = 0, 1 mod 4.
Discriminant make_discriminant(std::int64_t d);

bool is_squarefree(std::uint64_t n);

struct FrobeniusDiscriminant {
  std::int64_t trace = 0;
  /// Delta_Fr = 4p - t^2 = |d|.
  std::uint64_t delta = 0;
  Discriminant disc;
  bool delta_squarefree = false;
  bool delta_exceeds_3p = false;

  /// The minting acceptance predicate: Delta square-free and Delta > 3p.
  bool accepted() const noexcept { return delta_squarefree && delta_exceeds_3p; }
};

/// Throws Error(InvalidSerial) when sigma is outside the Hasse interval.
FrobeniusDiscriminant frobenius_discriminant(std::uint64_t p, std::uint64_t sigma);

inline constexpr std::uint64_t kMaxClassNumberDiscriminant = 100'000'000;

/// Number of reduced primitive forms (a, b, c) of discriminant d. Throws
/// Error(OutOfRange) above kMaxClassNumberDiscriminant.
std::uint64_t exact_class_number(const Discriminant& d);

/// 0.11 sqrt(p) / ln p.
double tatuzawa_lower_bound(double p);

/// Hypothesis of the lower bound with epsilon = 1/ln p:
/// |d| >= max(p, e^11.2).
bool tatuzawa_valid(double p, double abs_d);

/// (1/2 + 1/(2 pi)) ln|d| + (1/pi) ln ln|d| + 1.
double l_upper_bound(double abs_d);

/// ((1+pi)/pi^2) sqrt(p) ln(4p) + (2/pi^2) sqrt(p) ln ln(4p) + (2/pi) sqrt(p).
double class_number_upper_bound(double p);

/// Bracket for sqrt(2p / h(d)). The lower end uses natural logarithms; the
/// 4.251 upper end is paired with log2.
struct IterationBounds {
  double lower = 0.0;
  double upper = 0.0;
};

IterationBounds iteration_bounds(double p);

struct ClassNumberReport {
  std::uint64_t p = 0;
  std::uint64_t sigma = 0;
  FrobeniusDiscriminant frobenius;
  std::optional<std::uint64_t> h;
  double tatuzawa_lower = 0.0;
  bool tatuzawa_valid = false;
  double l_upper = 0.0;
  double h_upper = 0.0;
  double iteration_lower = 0.0;
  double iteration_upper = 0.0;
  /// sqrt(2p/h) when h is known.
  std::optional<double> iterations_exact;
};

/// Fills every bound; h is computed when with_exact is set and |d| is within
/// range.
ClassNumberReport class_number_report(std::uint64_t p, std::uint64_t sigma, bool with_exact = true);

}  // namespace twistforge
