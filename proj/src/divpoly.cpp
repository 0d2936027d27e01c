#include "twistforge/divpoly.hpp"

#include <string>

#include "twistforge/error.hpp"

namespace twistforge {

namespace {

// Multiplication by a small integer constant is accounted as additions.
Fp scale(const PrimeField& field, std::int64_t k, Fp a) { return field.mul(field.element(k), a); }

// Nonzero entries of a run of consecutive psi values must alternate parity
// consistently with some starting index.
void check_alternating(std::span<const TwistedValue> v, const char* who) {
  for (int start_parity = 0; start_parity < 2; ++start_parity) {
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      if (v[i].is_zero()) continue;
      ok = v[i].parity == psi_parity(start_parity + static_cast<std::int64_t>(i));
    }
    if (ok) return;
  }
  throw Error(ErrorKind::ParityMismatch, std::string(who) + ": inputs are not a run of consecutive psi values");
}

}  // namespace

Ambient make_ambient(const PrimeField& field, const WeierstrassCurve& E, Fp x, MultCounter& ctr) {
  Ambient amb;
  amb.A = E.A;
  amb.B = E.B;
  amb.x = x;
  amb.x2 = field.mul(x, x, ctr);
  amb.x3 = field.mul(amb.x2, x, ctr);
  amb.w = field.add(field.add(amb.x3, field.mul(E.A, x, ctr)), E.B);
  return amb;
}

Ambient make_ambient(const PrimeField& field, const WeierstrassCurve& E, Fp x) {
  MultCounter scratch;
  return make_ambient(field, E, x, scratch);
}

TwistedValue tv_mul(const PrimeField& field, const Ambient& amb, TwistedValue a, TwistedValue b,
                    MultCounter& ctr) {
  Fp c = field.mul(a.c, b.c, ctr);
  const int e = a.parity + b.parity;
  if (e == 2) c = field.mul(c, amb.w, ctr);
  return TwistedValue::make(c, e);
}

TwistedValue tv_add(const PrimeField& field, TwistedValue a, TwistedValue b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.parity != b.parity) {
    throw Error(ErrorKind::ParityMismatch, "cannot add c*y^0 and c*y^1 terms");
  }
  return TwistedValue::make(field.add(a.c, b.c), a.parity);
}

TwistedValue tv_sub(const PrimeField& field, TwistedValue a, TwistedValue b) {
  return tv_add(field, a, TwistedValue::make(field.neg(b.c), b.parity));
}

std::vector<TwistedValue> base_psi_table(const PrimeField& field, const Ambient& amb, int max_index,
                                         MultCounter& ctr) {
  if (max_index < kMinBaseIndex || max_index > kMaxBaseIndex) {
    throw Error(ErrorKind::IndexOutOfRange, "base psi index " + std::to_string(max_index));
  }
  std::vector<TwistedValue> psi(static_cast<std::size_t>(max_index + 2));
  auto at = [&](int n) -> TwistedValue& { return psi[static_cast<std::size_t>(n + 1)]; };

  at(-1) = TwistedValue::make(field.element(-1), 0);
  if (max_index >= 0) at(0) = TwistedValue{};
  if (max_index >= 1) at(1) = TwistedValue::make(field.one(), 0);
  if (max_index >= 2) at(2) = TwistedValue::make(field.element(2), 1);
  if (max_index >= 3) {
    const Fp& A = amb.A;
    const Fp& B = amb.B;
    Fp x4 = field.mul(amb.x2, amb.x2, ctr);
    Fp a2 = field.mul(A, A, ctr);
    // psi_3 = 3x^4 + 6Ax^2 + 12Bx - A^2
    Fp p3 = scale(field, 3, x4);
    p3 = field.add(p3, scale(field, 6, field.mul(A, amb.x2, ctr)));
    p3 = field.add(p3, scale(field, 12, field.mul(B, amb.x, ctr)));
    p3 = field.sub(p3, a2);
    at(3) = TwistedValue::make(p3, 0);

    if (max_index >= 4) {
      // psi_4 = 4y (x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - A^3 - 8B^2)
      Fp x6 = field.mul(x4, amb.x2, ctr);
      Fp ab = field.mul(A, B, ctr);
      Fp q = x6;
      q = field.add(q, scale(field, 5, field.mul(A, x4, ctr)));
      q = field.add(q, scale(field, 20, field.mul(B, amb.x3, ctr)));
      q = field.sub(q, scale(field, 5, field.mul(a2, amb.x2, ctr)));
      q = field.sub(q, scale(field, 4, field.mul(ab, amb.x, ctr)));
      q = field.sub(q, field.mul(a2, A, ctr));
      q = field.sub(q, scale(field, 8, field.mul(B, B, ctr)));
      at(4) = TwistedValue::make(scale(field, 4, q), 1);
    }
  }
  for (int m = 5; m <= max_index; ++m) {
    if (m % 2 == 1) {
      const int n = (m - 1) / 2;
      std::array<TwistedValue, 4> in{at(n - 1), at(n), at(n + 1), at(n + 2)};
      at(m) = g1(field, amb, in, ctr);
    } else {
      const int n = m / 2;
      std::array<TwistedValue, 5> in{at(n - 2), at(n - 1), at(n), at(n + 1), at(n + 2)};
      at(m) = g2(field, amb, in, ctr);
    }
  }
  return psi;
}

TwistedValue base_psi(const PrimeField& field, const Ambient& amb, int n, MultCounter& ctr) {
  if (n < kMinBaseIndex || n > kMaxBaseIndex) {
    throw Error(ErrorKind::IndexOutOfRange, "base psi index " + std::to_string(n));
  }
  return base_psi_table(field, amb, n, ctr).back();
}

TwistedValue g1(const PrimeField& field, const Ambient& amb, std::span<const TwistedValue, 4> v,
                MultCounter& ctr) {
  check_alternating(v, "g1");
  const TwistedValue& prev = v[0];
  const TwistedValue& mid = v[1];
  const TwistedValue& next = v[2];
  const TwistedValue& next2 = v[3];
  TwistedValue mid3 = tv_mul(field, amb, tv_mul(field, amb, mid, mid, ctr), mid, ctr);
  TwistedValue next3 = tv_mul(field, amb, tv_mul(field, amb, next, next, ctr), next, ctr);
  return tv_sub(field, tv_mul(field, amb, next2, mid3, ctr), tv_mul(field, amb, prev, next3, ctr));
}

TwistedValue g2(const PrimeField& field, const Ambient& amb, std::span<const TwistedValue, 5> v,
                MultCounter& ctr) {
  if (amb.w.v == 0) {
    throw Error(ErrorKind::TwoTorsionAmbient, "psi_2 = 2y is not invertible at a root of x^3+Ax+B");
  }
  check_alternating(v, "g2");
  const Fp& c_m2 = v[0].c;
  const Fp& c_m1 = v[1].c;
  const Fp& c_n = v[2].c;
  const Fp& c_p1 = v[3].c;
  const Fp& c_p2 = v[4].c;
  Fp left = field.mul(field.mul(c_m1, c_m1, ctr), c_p2, ctr);
  Fp right = field.mul(field.mul(c_p1, c_p1, ctr), c_m2, ctr);
  Fp c = field.mul(field.mul(c_n, field.sub(left, right), ctr), field.half(), ctr);
  return TwistedValue::make(c, 1);
}

PsiWindow base_window(const PrimeField& field, const Ambient& amb, int k, MultCounter& ctr) {
  if (k < kMinBaseIndex || k + kWindowSize - 1 > kMaxBaseIndex) {
    throw Error(ErrorKind::IndexOutOfRange, "base window at " + std::to_string(k));
  }
  auto table = base_psi_table(field, amb, k + kWindowSize - 1, ctr);
  PsiWindow win;
  win.base = k;
  for (int i = 0; i < kWindowSize; ++i) win.entries[static_cast<std::size_t>(i)] = table[static_cast<std::size_t>(k + 1 + i)];
  return win;
}

PsiWindow window_double(const PrimeField& field, const Ambient& amb, const PsiWindow& win,
                        int branch, MultCounter& ctr) {
  if (branch != 1 && branch != 2) {
    throw Error(ErrorKind::InvalidArgument, "branch must be 1 or 2, got " + std::to_string(branch));
  }
  const std::int64_t k = win.base;
  PsiWindow out;
  out.base = 2 * k + 3 + branch;
  auto slot = [&](std::int64_t index) -> const TwistedValue& {
    return win.entries[static_cast<std::size_t>(index - k)];
  };
  for (int i = 0; i < kWindowSize; ++i) {
    const std::int64_t target = out.base + i;
    if (target % 2 != 0) {
      const std::int64_t n = (target - 1) / 2;
      std::array<TwistedValue, 4> in{slot(n - 1), slot(n), slot(n + 1), slot(n + 2)};
      out.entries[static_cast<std::size_t>(i)] = g1(field, amb, in, ctr);
    } else {
      const std::int64_t n = target / 2;
      std::array<TwistedValue, 5> in{slot(n - 2), slot(n - 1), slot(n), slot(n + 1), slot(n + 2)};
      out.entries[static_cast<std::size_t>(i)] = g2(field, amb, in, ctr);
    }
  }
  return out;
}

DoublingSchedule make_schedule(std::uint64_t sigma) {
  if (sigma == 0) throw Error(ErrorKind::InvalidArgument, "schedule target must be >= 1");
  DoublingSchedule s;
  s.sigmas.push_back(sigma);
  while (s.sigmas.back() > 5) {
    const std::uint64_t cur = s.sigmas.back();
    s.sigmas.push_back(cur % 2 == 0 ? (cur - 4) / 2 : (cur - 5) / 2);
  }
  const std::size_t r = s.sigmas.size() - 1;
  s.branch_bits.resize(r);
  for (std::size_t i = 0; i < r; ++i) s.branch_bits[r - i - 1] = s.sigmas[i] % 2 == 0 ? 1 : 2;
  return s;
}

TwistedValue eval_division_poly(const PrimeField& field, const Ambient& amb, std::uint64_t ell,
                                MultCounter& ctr) {
  if (ell == 0) throw Error(ErrorKind::InvalidArgument, "division polynomial index must be >= 1");
  if (amb.w.v == 0) {
    throw Error(ErrorKind::TwoTorsionAmbient, "x = " + std::to_string(amb.x.v) + " is a root of x^3+Ax+B");
  }
  const DoublingSchedule schedule = make_schedule(ell);
  PsiWindow win = base_window(field, amb, static_cast<int>(schedule.sigmas.back()), ctr);
  for (int branch : schedule.branch_bits) win = window_double(field, amb, win, branch, ctr);
  return win.entries[0];
}

TwistedValue eval_division_poly(const PrimeField& field, const WeierstrassCurve& E, Fp x,
                                std::uint64_t ell, MultCounter& ctr) {
  return eval_division_poly(field, make_ambient(field, E, x, ctr), ell, ctr);
}

bool division_poly_vanishes(const PrimeField& field, const Ambient& amb, std::uint64_t ell,
                            MultCounter& ctr) {
  if (amb.w.v == 0) return ell % 2 == 0;
  return eval_division_poly(field, amb, ell, ctr).is_zero();
}

}  // namespace twistforge
