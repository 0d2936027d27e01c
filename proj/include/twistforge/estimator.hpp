#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "twistforge/curves.hpp"
#include "twistforge/forgery.hpp"

namespace twistforge {

/// Closed-form costs for an n-bit prime. Counts use n = ceil(log2 p); the
/// class-number terms use natural logarithms except the 4.251 bound.
struct ResourceReport {
  std::uint32_t bits = 0;
  /// 1944 n^2 field multiplications per oracle call.
  std::uint64_t mults_ours = 0;
  /// n^6, constant 1 by convention.
  std::uint64_t mults_bruteforce = 0;
  /// 12 n^2: 10 n^2 for the windows plus 2 n^2 for the stored G values.
  std::uint64_t qubits_ours = 0;
  /// n^3, constant 1 by convention.
  std::uint64_t qubits_bruteforce = 0;
  /// 80 n multiplications per division-polynomial evaluation.
  std::uint64_t eval_budget = 0;
  double iterations_lower = 0.0;
  double iterations_upper = 0.0;
  /// 5097 p^{1/4} n^4 / sqrt(n + 2 ln ln(4p) / (pi + 1)) bit operations.
  double total_lower = 0.0;
  /// 8264 p^{1/4} n^{9/2} bit operations.
  double total_upper = 0.0;
  /// mults_ours * n^2 * iterations, from the bracket ends directly.
  double product_lower = 0.0;
  double product_upper = 0.0;
};

/// p taken as 2^bits. Throws Error(InvalidArgument) for bits < 8 or > 1000.
ResourceReport estimate_bits(std::uint32_t bits);
/// Uses the actual p for p^{1/4} and the iteration bracket.
ResourceReport estimate_prime(std::uint64_t p);

/// printf %.12g, used for every real column.
std::string format_real(double v);

inline constexpr const char* kReportCsvHeader =
    "bits,mults_ours,mults_bf,qubits_ours,qubits_bf,iter_lo,iter_hi,total_lo,total_hi";

std::string report_csv_row(const ResourceReport& r);
/// Every field, integers as decimal strings.
std::string report_json(const ResourceReport& r);

struct AuditRow {
  std::uint64_t p = 0;
  std::uint32_t bits = 0;
  std::uint64_t sigma = 0;
  std::uint64_t tau = 0;
  std::uint64_t classes_sampled = 0;
  /// One forward oracle call with every G evaluated (no short circuit).
  std::uint64_t oracle_mults_max = 0;
  double oracle_mults_mean = 0.0;
  /// Forward plus uncompute, twice the forward count.
  std::uint64_t oracle_mults_reversible = 0;
  std::uint64_t oracle_budget = 0;
  double ratio = 0.0;
  /// Largest single eval_division_poly count seen, and the largest excess
  /// over 80 ceil(log2 ell) across both ell = sigma and ell = 2p + 2 - sigma.
  std::uint64_t eval_mults_max = 0;
  std::int64_t eval_base_excess = std::numeric_limits<std::int64_t>::min();
  bool within_budget = false;
};

/// Instrumented run over up to max_classes classes spread evenly across the
/// enumeration order.
AuditRow audit(const PrimeField& field, const NonResidueTable& nr, const SerialNumber& s,
               std::uint64_t tau, std::uint64_t max_classes = 64);

inline constexpr const char* kAuditCsvHeader =
    "p,bits,sigma,tau,classes,oracle_max,oracle_mean,oracle_reversible,oracle_budget,ratio,eval_max,"
    "eval_base_excess,within_budget";
std::string audit_csv_row(const AuditRow& a);
std::string audit_json(const AuditRow& a);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct AttackComparison {
  double h = 0.0;
  /// Search-space sizes: h for the random-walk route, 2p/h for ours.
  double space_walk = 0.0;
  double space_ours = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double cost_walk = 0.0;
  double cost_ours = 0.0;
  /// sqrt(h^2 / 2p), walk iterations over ours.
  double iteration_ratio = 0.0;
};

/// T2 is 1944 n^2. T1 defaults to p^2 n, the point-counting bottleneck with
/// ell = p. Throws Error(InvalidArgument) for h <= 0.
AttackComparison compare_attacks(std::uint64_t p, double h, std::optional<double> t1 = std::nullopt);

}  // namespace twistforge
