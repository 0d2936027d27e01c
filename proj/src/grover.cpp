#include "twistforge/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "twistforge/error.hpp"

namespace twistforge {

double AmplitudeVector::norm_squared() const noexcept {
  double s = 0.0;
  for (double a : amp_) s += a * a;
  return s;
}

double AmplitudeVector::mass(std::span<const std::size_t> indices) const {
  double s = 0.0;
  for (std::size_t i : indices) s += amp_.at(i) * amp_.at(i);
  return s;
}

AmplitudeVector init_uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "state space must be nonempty");
  return AmplitudeVector(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

void apply_oracle(AmplitudeVector& v, std::span<const std::size_t> marked) {
  for (std::size_t i : marked) {
    if (i >= v.size()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "marked index " + std::to_string(i) + " outside [0, " + std::to_string(v.size()) + ")");
    }
  }
  for (std::size_t i : marked) v[i] = -v[i];
}

void diffuse(AmplitudeVector& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += v[i];
  const double twice_mean = 2.0 * sum / static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = twice_mean - v[i];
}

double grover_success_probability(double n, double m, std::uint64_t iterations) {
  const double theta = std::asin(std::sqrt(m / n));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

const char* to_string(PlanBasis basis) {
  return basis == PlanBasis::exact_M ? "exact_M" : "class_number_bounds";
}

std::uint64_t optimal_iterations(double n, double m) {
  if (m >= n) return 0;
  const auto k = static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(n / m)));
  return std::max<std::uint64_t>(k, 1);
}

SearchPlan plan_iterations(std::uint64_t p, const SerialNumber& s, std::optional<std::uint64_t> exact_M,
                           const ClassNumberReport& bounds) {
  if (s.p() != p) throw Error(ErrorKind::InvalidSerial, "serial number belongs to another prime");
  SearchPlan plan;
  plan.N = class_count(PrimeField(p));
  plan.sandwich_lower = bounds.iteration_lower;
  plan.sandwich_upper = bounds.iteration_upper;
  const auto n = static_cast<double>(plan.N);
  if (exact_M) {
    if (*exact_M == 0) {
      throw Error(ErrorKind::NoTarget, "no curve over F_" + std::to_string(p) + " has " +
                                           std::to_string(s.sigma()) + " points");
    }
    plan.basis = PlanBasis::exact_M;
    plan.M = static_cast<double>(*exact_M);
  } else {
    plan.basis = PlanBasis::class_number_bounds;
    plan.M = std::max(1.0, bounds.tatuzawa_lower);
  }
  plan.iterations = optimal_iterations(n, plan.M);
  plan.predicted_success = grover_success_probability(n, std::min(plan.M, n), plan.iterations);
  plan.sqrt_2p_over_h = std::sqrt(2.0 * static_cast<double>(p) / plan.M);
  return plan;
}

std::size_t sample_index(const AmplitudeVector& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * v.norm_squared();
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i] * v[i];
    if (u < acc) return i;
  }
  return v.size() - 1;
}

SearchResult simulate_grover(std::size_t n, std::span<const std::size_t> marked,
                             std::uint64_t iterations, std::uint64_t seed) {
  AmplitudeVector v = init_uniform(n);
  SearchResult out;
  out.iterations = iterations;
  out.oracle_queries = iterations;
  for (std::uint64_t k = 0; k < iterations; ++k) {
    apply_oracle(v, marked);
    diffuse(v);
    out.max_norm_drift = std::max(out.max_norm_drift, std::abs(v.norm_squared() - 1.0));
  }
  out.success_probability = v.mass(marked);
  for (std::size_t i : marked) {
    const double pr = out.success_probability > 0.0 ? v[i] * v[i] / out.success_probability : 0.0;
    out.conditional.emplace_back(i, pr);
  }
  out.sample = sample_index(v, seed);
  out.sample_marked = std::find(marked.begin(), marked.end(), out.sample) != marked.end();
  return out;
}

SearchResult run_search(const PrimeField& field, const NonResidueTable& nr, const SerialNumber& s,
                        const SearchPlan& plan, const OracleConfig& cfg, std::uint64_t seed) {
  const auto marked = marked_classes(field, nr, s, cfg);
  if (marked.empty()) {
    throw Error(ErrorKind::NoTarget, "oracle marks no class for sigma=" + std::to_string(s.sigma()));
  }
  return simulate_grover(class_count(field), marked, plan.iterations, seed);
}

}  // namespace twistforge
