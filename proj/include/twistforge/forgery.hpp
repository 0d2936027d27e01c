#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistforge/curves.hpp"
#include "twistforge/divpoly.hpp"
#include "twistforge/fp.hpp"

namespace twistforge {

/// Cardinality target sigma with 0 < |sigma - p - 1| <= 2 sqrt(p).
class SerialNumber {
 public:
  /// Throws Error(InvalidSerial) outside the punctured Hasse band.
  SerialNumber(std::uint64_t p, std::uint64_t sigma);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t sigma() const noexcept { return sigma_; }
  /// Cardinality the quadratic twist of a target curve has: 2p + 2 - sigma.
  std::uint64_t twist_sigma() const noexcept { return 2 * p_ + 2 - sigma_; }
  std::int64_t trace() const noexcept {
    return static_cast<std::int64_t>(sigma_) - static_cast<std::int64_t>(p_) - 1;
  }

  static bool is_valid(std::uint64_t p, std::uint64_t sigma) noexcept;

  /// Every valid sigma for p, ascending.
  static std::vector<std::uint64_t> all_valid(std::uint64_t p);

  friend bool operator==(const SerialNumber&, const SerialNumber&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t sigma_;
};

enum class AggregationMode {
  /// Field sum of the tau G values, as accumulated in a single register.
  paper_sum,
  /// 0 iff every G value is 0; immune to cancellation.
  strict_or,
};

const char* to_string(AggregationMode mode);
AggregationMode parse_mode(const std::string& name);

/// ceil(log2 n) for n >= 1.
std::uint32_t ceil_log2(std::uint64_t n);

struct OracleConfig {
  std::uint64_t tau = 1;
  AggregationMode mode = AggregationMode::strict_or;
  /// In strict_or mode, stop at the first nonzero G. The decision is
  /// unchanged; only the multiplication count differs.
  bool short_circuit = true;

  /// tau = 3 * ceil(log2 p).
  static OracleConfig for_prime(std::uint64_t p, AggregationMode mode = AggregationMode::strict_or);
};

/// Coefficient of psi_sigma (w a residue) or psi_{2p+2-sigma} (w a
/// nonresidue) at x. At a root of x^3+Ax+B the point has order 2, so the
/// result is 0 for even sigma and 1 for odd sigma.
Fp G(const PrimeField& field, const WeierstrassCurve& E, Fp x, const SerialNumber& s,
     MultCounter& ctr);

/// Aggregate of G over start, start+1, ..., start+tau-1 (mod p). In
/// strict_or mode the result is 0 or 1.
Fp F(const PrimeField& field, const WeierstrassCurve& E, const SerialNumber& s,
     const OracleConfig& cfg, MultCounter& ctr, Fp start = Fp{0});

/// 1 iff F = 0 for the curve of class c, i.e. the phase would flip.
int oracle_predicate(const PrimeField& field, const NonResidueTable& nr, const CurveClass& c,
                     const SerialNumber& s, const OracleConfig& cfg, MultCounter& ctr);
int oracle_predicate(const PrimeField& field, const NonResidueTable& nr, const CurveClass& c,
                     const SerialNumber& s, const OracleConfig& cfg);

/// Indices into enumerate_classes(field) where the predicate is 1.
std::vector<std::size_t> marked_classes(const PrimeField& field, const NonResidueTable& nr,
                                        const SerialNumber& s, const OracleConfig& cfg);

struct FalsePositiveRow {
  std::uint64_t tau = 0;
  std::uint64_t samples = 0;
  std::uint64_t zero_strict = 0;
  std::uint64_t zero_sum = 0;
  double rate_strict = 0.0;
  double rate_sum = 0.0;
  /// (3/4 + slack)^tau with slack = (p+1+2 sqrt p)/(4p+4) - 1/4.
  double bound = 0.0;
};

/// Per-x zero slack from the coset argument: (p+1+2 sqrt p)/(4p+4) - 1/4.
double zero_fraction_slack(std::uint64_t p);

/// For each tau, the fraction of (non-target class, start x) pairs with F = 0.
/// trials = 0 uses every start x in F_p; otherwise `trials` seeded random
/// starts per class. tau = 0 yields rate 1 (empty conjunction).
std::vector<FalsePositiveRow> false_positive_experiment(const PrimeField& field,
                                                        const NonResidueTable& nr,
                                                        const SerialNumber& s,
                                                        const std::vector<std::uint64_t>& taus,
                                                        std::uint64_t trials, std::uint64_t seed);

}  // namespace twistforge
