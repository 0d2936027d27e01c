#include "twistforge/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "twistforge/classnum.hpp"
#include "twistforge/divpoly.hpp"
#include "twistforge/error.hpp"

namespace twistforge {

namespace {

ResourceReport fill(std::uint32_t n, double p) {
  const double nd = n;
  ResourceReport r;
  r.bits = n;
  const std::uint64_t n2 = std::uint64_t{n} * n;
  r.mults_ours = 1944 * n2;
  r.mults_bruteforce = n2 * n2 * n2;
  r.qubits_ours = 12 * n2;
  r.qubits_bruteforce = n2 * n;
  r.eval_budget = 80 * std::uint64_t{n};
  const IterationBounds it = iteration_bounds(p);
  r.iterations_lower = it.lower;
  r.iterations_upper = it.upper;
  const double q = std::pow(p, 0.25);
  const double loglog = 2.0 * std::log(std::log(4.0 * p)) / (std::numbers::pi + 1.0);
  r.total_lower = 5097.0 * q * std::pow(nd, 4) / std::sqrt(nd + loglog);
  r.total_upper = 8264.0 * q * std::pow(nd, 4.5);
  const double bitops_per_call = static_cast<double>(r.mults_ours) * nd * nd;
  r.product_lower = bitops_per_call * it.lower;
  r.product_upper = bitops_per_call * it.upper;
  return r;
}

}  // namespace

ResourceReport estimate_bits(std::uint32_t bits) {
  if (bits < 8 || bits > 1000) {
    throw Error(ErrorKind::InvalidArgument, "bits must lie in [8, 1000], got " + std::to_string(bits));
  }
  return fill(bits, std::ldexp(1.0, static_cast<int>(bits)));
}

ResourceReport estimate_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime >= 5");
  }
  return fill(std::max<std::uint32_t>(ceil_log2(p), 1), static_cast<double>(p));
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string report_csv_row(const ResourceReport& r) {
  std::ostringstream out;
  out << r.bits << ',' << r.mults_ours << ',' << r.mults_bruteforce << ',' << r.qubits_ours << ','
      << r.qubits_bruteforce << ',' << format_real(r.iterations_lower) << ','
      << format_real(r.iterations_upper) << ',' << format_real(r.total_lower) << ','
      << format_real(r.total_upper);
  return out.str();
}

std::string report_json(const ResourceReport& r) {
  nlohmann::ordered_json j;
  j["bits"] = std::to_string(r.bits);
  j["mults_ours"] = std::to_string(r.mults_ours);
  j["mults_bf"] = std::to_string(r.mults_bruteforce);
  j["qubits_ours"] = std::to_string(r.qubits_ours);
  j["qubits_bf"] = std::to_string(r.qubits_bruteforce);
  j["eval_budget"] = std::to_string(r.eval_budget);
  j["iter_lo"] = format_real(r.iterations_lower);
  j["iter_hi"] = format_real(r.iterations_upper);
  j["total_lo"] = format_real(r.total_lower);
  j["total_hi"] = format_real(r.total_upper);
  j["product_lo"] = format_real(r.product_lower);
  j["product_hi"] = format_real(r.product_upper);
  j["convention"] = "mults_bf = n^6, qubits_bf = n^3";
  return j.dump();
}

AuditRow audit(const PrimeField& field, const NonResidueTable& nr, const SerialNumber& s,
               std::uint64_t tau, std::uint64_t max_classes) {
  const auto classes = enumerate_classes(field);
  AuditRow a;
  a.p = field.modulus();
  a.bits = ceil_log2(a.p);
  a.sigma = s.sigma();
  a.tau = tau;
  a.oracle_budget = 1944 * std::uint64_t{a.bits} * a.bits;
  OracleConfig cfg;
  cfg.tau = tau;
  cfg.mode = AggregationMode::paper_sum;
  cfg.short_circuit = false;

  const std::uint64_t count = std::min<std::uint64_t>(std::max<std::uint64_t>(max_classes, 1), classes.size());
  const std::uint64_t stride = classes.size() / count;
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const CurveClass& c = classes[i * stride];
    MultCounter ctr;
    oracle_predicate(field, nr, c, s, cfg, ctr);
    a.oracle_mults_max = std::max(a.oracle_mults_max, ctr.count);
    total += ctr.count;

    const WeierstrassCurve E = get_weierstrass_pair(field, c, nr);
    Fp x = field.zero();
    for (std::uint64_t k = 0; k < tau; ++k, x = field.add(x, field.one())) {
      const Ambient amb = make_ambient(field, E, x);
      if (amb.w.v == 0) continue;
      for (std::uint64_t ell : {s.sigma(), s.twist_sigma()}) {
        MultCounter ec;
        eval_division_poly(field, amb, ell, ec);
        a.eval_mults_max = std::max(a.eval_mults_max, ec.count);
        const auto excess = static_cast<std::int64_t>(ec.count) - 80 * static_cast<std::int64_t>(ceil_log2(ell));
        a.eval_base_excess = std::max(a.eval_base_excess, excess);
      }
    }
  }
  a.classes_sampled = count;
  a.oracle_mults_mean = static_cast<double>(total) / static_cast<double>(count);
  a.oracle_mults_reversible = 2 * a.oracle_mults_max;
  a.ratio = static_cast<double>(a.oracle_mults_reversible) / static_cast<double>(a.oracle_budget);
  a.within_budget = a.oracle_mults_reversible <= a.oracle_budget;
  return a;
}

std::string audit_csv_row(const AuditRow& a) {
  std::ostringstream out;
  out << a.p << ',' << a.bits << ',' << a.sigma << ',' << a.tau << ',' << a.classes_sampled << ','
      << a.oracle_mults_max << ',' << format_real(a.oracle_mults_mean) << ','
      << a.oracle_mults_reversible << ',' << a.oracle_budget << ',' << format_real(a.ratio) << ','
      << a.eval_mults_max << ',' << a.eval_base_excess << ',' << (a.within_budget ? 1 : 0);
  return out.str();
}

std::string audit_json(const AuditRow& a) {
  nlohmann::ordered_json j;
  j["p"] = std::to_string(a.p);
  j["bits"] = std::to_string(a.bits);
  j["sigma"] = std::to_string(a.sigma);
  j["tau"] = std::to_string(a.tau);
  j["classes"] = std::to_string(a.classes_sampled);
  j["oracle_max"] = std::to_string(a.oracle_mults_max);
  j["oracle_mean"] = format_real(a.oracle_mults_mean);
  j["oracle_reversible"] = std::to_string(a.oracle_mults_reversible);
  j["oracle_budget"] = std::to_string(a.oracle_budget);
  j["ratio"] = format_real(a.ratio);
  j["eval_max"] = std::to_string(a.eval_mults_max);
  j["eval_base_excess"] = std::to_string(a.eval_base_excess);
  j["within_budget"] = a.within_budget ? "1" : "0";
  return j.dump();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "slope needs at least two paired samples");
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw Error(ErrorKind::InvalidArgument, "slope needs distinct x values");
  return sxy / sxx;
}

AttackComparison compare_attacks(std::uint64_t p, double h, std::optional<double> t1) {
  if (!(h > 0)) throw Error(ErrorKind::InvalidArgument, "class number must be positive");
  const double pd = static_cast<double>(p);
  const double n = std::max<std::uint32_t>(ceil_log2(p), 1);
  AttackComparison c;
  c.h = h;
  c.space_walk = h;
  c.space_ours = 2.0 * pd / h;
  c.t1 = t1.value_or(pd * pd * n);
  c.t2 = 1944.0 * n * n;
  c.cost_walk = c.t1 * std::sqrt(c.space_walk);
  c.cost_ours = c.t2 * std::sqrt(c.space_ours);
  c.iteration_ratio = std::sqrt(h * h / (2.0 * pd));
  return c;
}

}  // namespace twistforge
