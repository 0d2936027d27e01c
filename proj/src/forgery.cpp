#include "twistforge/forgery.hpp"

#include <cmath>
#include <random>
#include <string>

#include "twistforge/error.hpp"

namespace twistforge {

SerialNumber::SerialNumber(std::uint64_t p, std::uint64_t sigma) : p_(p), sigma_(sigma) {
  if (!is_valid(p, sigma)) {
    throw Error(ErrorKind::InvalidSerial, "sigma=" + std::to_string(sigma) +
                                              " is outside 0 < |sigma-p-1| <= 2 sqrt(p) for p=" +
                                              std::to_string(p));
  }
}

bool SerialNumber::is_valid(std::uint64_t p, std::uint64_t sigma) noexcept {
  const std::int64_t t = static_cast<std::int64_t>(sigma) - static_cast<std::int64_t>(p) - 1;
  return t != 0 && t * t <= 4 * static_cast<std::int64_t>(p);
}

std::vector<std::uint64_t> SerialNumber::all_valid(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  auto t = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(p))) + 1;
  for (std::int64_t trace = -t; trace <= t; ++trace) {
    const std::int64_t sigma = static_cast<std::int64_t>(p) + 1 + trace;
    if (sigma > 0 && is_valid(p, static_cast<std::uint64_t>(sigma))) {
      out.push_back(static_cast<std::uint64_t>(sigma));
    }
  }
  return out;
}

const char* to_string(AggregationMode mode) {
  return mode == AggregationMode::paper_sum ? "paper_sum" : "strict_or";
}

AggregationMode parse_mode(const std::string& name) {
  if (name == "paper_sum") return AggregationMode::paper_sum;
  if (name == "strict_or") return AggregationMode::strict_or;
  throw Error(ErrorKind::InvalidArgument, "unknown mode '" + name + "'");
}

std::uint32_t ceil_log2(std::uint64_t n) {
  std::uint32_t bits = 0;
  while ((std::uint64_t{1} << bits) < n) ++bits;
  return bits;
}

OracleConfig OracleConfig::for_prime(std::uint64_t p, AggregationMode mode) {
  OracleConfig cfg;
  cfg.tau = 3 * ceil_log2(p);
  cfg.mode = mode;
  return cfg;
}

Fp G(const PrimeField& field, const WeierstrassCurve& E, Fp x, const SerialNumber& s,
     MultCounter& ctr) {
  const Ambient amb = make_ambient(field, E, x, ctr);
  switch (field.euler_criterion(amb.w, ctr)) {
    case QuadraticCharacter::zero:
      return s.sigma() % 2 == 0 ? field.zero() : field.one();
    case QuadraticCharacter::residue:
      return eval_division_poly(field, amb, s.sigma(), ctr).c;
    case QuadraticCharacter::nonresidue:
      return eval_division_poly(field, amb, s.twist_sigma(), ctr).c;
  }
  return field.one();
}

Fp F(const PrimeField& field, const WeierstrassCurve& E, const SerialNumber& s,
     const OracleConfig& cfg, MultCounter& ctr, Fp start) {
  Fp sum = field.zero();
  bool any_nonzero = false;
  Fp x = start;
  for (std::uint64_t i = 0; i < cfg.tau; ++i) {
    Fp g = G(field, E, x, s, ctr);
    sum = field.add(sum, g);
    if (g.v != 0) {
      any_nonzero = true;
      if (cfg.mode == AggregationMode::strict_or && cfg.short_circuit) break;
    }
    x = field.add(x, field.one());
  }
  if (cfg.mode == AggregationMode::paper_sum) return sum;
  return any_nonzero ? field.one() : field.zero();
}

int oracle_predicate(const PrimeField& field, const NonResidueTable& nr, const CurveClass& c,
                     const SerialNumber& s, const OracleConfig& cfg, MultCounter& ctr) {
  if (s.p() != field.modulus()) {
    throw Error(ErrorKind::InvalidSerial, "serial number belongs to p=" + std::to_string(s.p()));
  }
  const WeierstrassCurve E = get_weierstrass_pair(field, c, nr, ctr);
  return F(field, E, s, cfg, ctr).v == 0 ? 1 : 0;
}

int oracle_predicate(const PrimeField& field, const NonResidueTable& nr, const CurveClass& c,
                     const SerialNumber& s, const OracleConfig& cfg) {
  MultCounter scratch;
  return oracle_predicate(field, nr, c, s, cfg, scratch);
}

std::vector<std::size_t> marked_classes(const PrimeField& field, const NonResidueTable& nr,
                                        const SerialNumber& s, const OracleConfig& cfg) {
  std::vector<std::size_t> marked;
  const auto classes = enumerate_classes(field);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (oracle_predicate(field, nr, classes[i], s, cfg) == 1) marked.push_back(i);
  }
  return marked;
}

double zero_fraction_slack(std::uint64_t p) {
  const double pd = static_cast<double>(p);
  return (pd + 1.0 + 2.0 * std::sqrt(pd)) / (4.0 * pd + 4.0) - 0.25;
}

std::vector<FalsePositiveRow> false_positive_experiment(const PrimeField& field,
                                                        const NonResidueTable& nr,
                                                        const SerialNumber& s,
                                                        const std::vector<std::uint64_t>& taus,
                                                        std::uint64_t trials, std::uint64_t seed) {
  const std::uint32_t p = field.modulus();
  SquareRootTable roots(field);
  std::mt19937_64 rng(seed);

  std::vector<FalsePositiveRow> rows(taus.size());
  for (std::size_t t = 0; t < taus.size(); ++t) {
    rows[t].tau = taus[t];
    rows[t].bound = std::pow(0.75 + zero_fraction_slack(p), static_cast<double>(taus[t]));
  }

  std::vector<Fp> g(p);
  for (const auto& c : enumerate_classes(field)) {
    const WeierstrassCurve E = get_weierstrass_pair(field, c, nr);
    if (count_points(field, E, roots) == s.sigma()) continue;
    MultCounter scratch;
    for (std::uint32_t x = 0; x < p; ++x) g[x] = G(field, E, Fp{x}, s, scratch);

    std::vector<std::uint32_t> starts;
    if (trials == 0) {
      for (std::uint32_t x = 0; x < p; ++x) starts.push_back(x);
    } else {
      for (std::uint64_t i = 0; i < trials; ++i) starts.push_back(static_cast<std::uint32_t>(rng() % p));
    }
    // zero_run[x]: consecutive zero G values from x onward, cyclically.
    // prefix[i]: sum of g[0..i) over two laps, so windows never wrap.
    std::vector<std::uint64_t> zero_run(p, 0);
    std::uint64_t run = 0;
    for (std::uint32_t lap = 0; lap < 2; ++lap) {
      for (std::uint32_t k = p; k-- > 0;) {
        run = g[k].v == 0 ? std::min<std::uint64_t>(run + 1, p) : 0;
        zero_run[k] = run;
      }
    }
    std::vector<std::uint64_t> prefix(2 * static_cast<std::size_t>(p) + 1, 0);
    for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(p); ++i) prefix[i + 1] = prefix[i] + g[i % p].v;

    for (std::size_t t = 0; t < taus.size(); ++t) {
      const std::uint64_t laps = taus[t] / p;
      const std::uint64_t rest = taus[t] % p;
      const std::uint64_t full = prefix[p] % p;
      for (std::uint32_t start : starts) {
        const bool all_zero = zero_run[start] >= std::min<std::uint64_t>(taus[t], p);
        const std::uint64_t sum = (laps % p * full + (prefix[start + rest] - prefix[start]) % p) % p;
        rows[t].samples++;
        if (all_zero) rows[t].zero_strict++;
        if (sum == 0) rows[t].zero_sum++;
      }
    }
  }
  for (auto& row : rows) {
    if (row.samples == 0) continue;
    row.rate_strict = static_cast<double>(row.zero_strict) / static_cast<double>(row.samples);
    row.rate_sum = static_cast<double>(row.zero_sum) / static_cast<double>(row.samples);
  }
  return rows;
}

}  // namespace twistforge
