#include "twistforge/classnum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "twistforge/error.hpp"

namespace twistforge {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return false;
  }
  return true;
}

Discriminant make_discriminant(std::int64_t d) {
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (d >= 0 || (r != 0 && r != 1)) {
    throw Error(ErrorKind::InvalidArgument,
                "discriminant must be negative and 0 or 1 mod 4, got " + std::to_string(d));
  }
  Discriminant out;
  out.d = d;
  const auto abs_d = static_cast<std::uint64_t>(-d);
  if (r == 1) {
    out.is_squarefree = is_squarefree(abs_d);
    out.is_fundamental = out.is_squarefree;
  } else {
    const std::int64_t m = d / 4;
    const std::int64_t mr = ((m % 4) + 4) % 4;
    out.is_squarefree = is_squarefree(abs_d / 4);
    out.is_fundamental = out.is_squarefree && (mr == 2 || mr == 3);
  }
  return out;
}

FrobeniusDiscriminant frobenius_discriminant(std::uint64_t p, std::uint64_t sigma) {
  const std::int64_t t = static_cast<std::int64_t>(sigma) - static_cast<std::int64_t>(p) - 1;
  const std::int64_t four_p = 4 * static_cast<std::int64_t>(p);
  if (t * t > four_p) {
    throw Error(ErrorKind::InvalidSerial, "sigma=" + std::to_string(sigma) + " is outside the Hasse interval");
  }
  FrobeniusDiscriminant out;
  out.trace = t;
  out.delta = static_cast<std::uint64_t>(four_p - t * t);
  out.delta_squarefree = is_squarefree(out.delta);
  out.delta_exceeds_3p = out.delta > 3 * p;
  if (out.delta > 0) out.disc = make_discriminant(-static_cast<std::int64_t>(out.delta));
  return out;
}

std::uint64_t exact_class_number(const Discriminant& disc) {
  const std::uint64_t abs_d = disc.abs();
  if (abs_d > kMaxClassNumberDiscriminant) {
    throw Error(ErrorKind::OutOfRange, "|d|=" + std::to_string(abs_d) + " exceeds the desk-scale cap");
  }
  std::uint64_t h = 0;
  const std::uint64_t parity = abs_d % 2;
  for (std::uint64_t b = parity; 3 * b * b <= abs_d; b += 2) {
    const std::uint64_t ac = (b * b + abs_d) / 4;
    for (std::uint64_t a = std::max<std::uint64_t>(b, 1); a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const std::uint64_t c = ac / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      h += (b == 0 || b == a || a == c) ? 1 : 2;
    }
  }
  return h;
}

double tatuzawa_lower_bound(double p) { return 0.11 * std::sqrt(p) / std::log(p); }

bool tatuzawa_valid(double p, double abs_d) {
  if (std::log(p) <= 2.0) return false;  // epsilon = 1/ln p must be below 1/2
  return abs_d >= std::max(p, std::exp(11.2));
}

double l_upper_bound(double abs_d) {
  const double ln_d = std::log(abs_d);
  return (0.5 + 1.0 / (2.0 * kPi)) * ln_d + std::log(ln_d) / kPi + 1.0;
}

double class_number_upper_bound(double p) {
  const double s = std::sqrt(p);
  const double ln4p = std::log(4.0 * p);
  return (1.0 + kPi) / (kPi * kPi) * s * ln4p + 2.0 / (kPi * kPi) * s * std::log(ln4p) + 2.0 / kPi * s;
}

IterationBounds iteration_bounds(double p) {
  const double q = std::pow(p, 0.25);
  const double ln4p = std::log(4.0 * p);
  IterationBounds out;
  out.lower = std::sqrt(2.0) * kPi * q / std::sqrt((kPi + 1.0) * ln4p + 2.0 * std::log(ln4p) + 2.0 * kPi);
  out.upper = 4.251 * q * std::sqrt(std::log2(p));
  return out;
}

ClassNumberReport class_number_report(std::uint64_t p, std::uint64_t sigma, bool with_exact) {
  ClassNumberReport r;
  r.p = p;
  r.sigma = sigma;
  r.frobenius = frobenius_discriminant(p, sigma);
  const auto pd = static_cast<double>(p);
  const auto abs_d = static_cast<double>(r.frobenius.delta);
  r.tatuzawa_lower = tatuzawa_lower_bound(pd);
  r.tatuzawa_valid = tatuzawa_valid(pd, abs_d);
  r.l_upper = abs_d >= 3 ? l_upper_bound(abs_d) : 0.0;
  r.h_upper = class_number_upper_bound(pd);
  const IterationBounds it = iteration_bounds(pd);
  r.iteration_lower = it.lower;
  r.iteration_upper = it.upper;
  if (with_exact && r.frobenius.delta > 0 && r.frobenius.delta <= kMaxClassNumberDiscriminant) {
    r.h = exact_class_number(r.frobenius.disc);
    r.iterations_exact = std::sqrt(2.0 * pd / static_cast<double>(*r.h));
  }
  return r;
}

}  // namespace twistforge
