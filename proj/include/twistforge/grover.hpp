#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twistforge/classnum.hpp"
#include "twistforge/curves.hpp"
#include "twistforge/forgery.hpp"

namespace twistforge {

/// Real amplitudes over the class index space. Both Grover operators are
/// real, so the state never leaves R^N.
class AmplitudeVector {
 public:
  explicit AmplitudeVector(std::vector<double> amplitudes) : amp_(std::move(amplitudes)) {}

  std::size_t size() const noexcept { return amp_.size(); }
  double operator[](std::size_t i) const { return amp_[i]; }
  double& operator[](std::size_t i) { return amp_[i]; }
  std::span<const double> amplitudes() const noexcept { return amp_; }

  double norm_squared() const noexcept;
  /// Sum of squared amplitudes over the given indices.
  double mass(std::span<const std::size_t> indices) const;

 private:
  std::vector<double> amp_;
};

/// Every amplitude 1/sqrt(N). Throws Error(InvalidArgument) for N = 0.
AmplitudeVector init_uniform(std::size_t n);

/// Negates the marked amplitudes. Throws Error(IndexOutOfRange).
void apply_oracle(AmplitudeVector& v, std::span<const std::size_t> marked);

/// Inversion about the mean: a -> 2 mean - a.
void diffuse(AmplitudeVector& v);

/// sin^2((2k+1) asin(sqrt(M/N))).
double grover_success_probability(double n, double m, std::uint64_t iterations);

enum class PlanBasis { exact_M, class_number_bounds };

const char* to_string(PlanBasis basis);

struct SearchPlan {
  std::uint64_t N = 0;
  /// Marked count, or the class-number lower bound used in its place.
  double M = 0.0;
  std::uint64_t iterations = 0;
  PlanBasis basis = PlanBasis::exact_M;
  /// Closed-form success probability if exactly M targets exist.
  double predicted_success = 0.0;
  /// sqrt(2p/h) with the h the plan used, as the unrounded iteration count.
  double sqrt_2p_over_h = 0.0;
  double sandwich_lower = 0.0;
  double sandwich_upper = 0.0;
};

/// floor(pi/4 sqrt(N/M)), at least 1 when M < N and 0 when M = N.
std::uint64_t optimal_iterations(double n, double m);

/// With exact_M present the plan is exact; otherwise M is replaced by
/// max(1, Tatuzawa lower bound). Throws Error(NoTarget) when exact_M is 0.
SearchPlan plan_iterations(std::uint64_t p, const SerialNumber& s, std::optional<std::uint64_t> exact_M,
                           const ClassNumberReport& bounds);

struct SearchResult {
  std::uint64_t iterations = 0;
  std::uint64_t oracle_queries = 0;
  double success_probability = 0.0;
  /// (class index, probability conditioned on landing in the marked set).
  std::vector<std::pair<std::size_t, double>> conditional;
  std::size_t sample = 0;
  bool sample_marked = false;
  double max_norm_drift = 0.0;
};

/// Dense simulation for an arbitrary marked set.
SearchResult simulate_grover(std::size_t n, std::span<const std::size_t> marked,
                             std::uint64_t iterations, std::uint64_t seed);

/// Marked set from oracle_predicate over every class, then simulate_grover.
/// Throws Error(NoTarget) when no class is marked.
SearchResult run_search(const PrimeField& field, const NonResidueTable& nr, const SerialNumber& s,
                        const SearchPlan& plan, const OracleConfig& cfg, std::uint64_t seed);

/// Index drawn from the squared amplitudes with a 53-bit uniform variate.
std::size_t sample_index(const AmplitudeVector& v, std::uint64_t seed);

}  // namespace twistforge
