#include "twistforge/curves.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "twistforge/error.hpp"

namespace twistforge {

namespace {

bool is_sextic_generator(const PrimeField& field, Fp a) {
  const std::uint32_t p = field.modulus();
  if (field.euler_criterion(a) != QuadraticCharacter::nonresidue) return false;
  return field.pow(a, (p - 1) / 3).v != 1;
}

Fp smallest_matching(const PrimeField& field, auto&& pred) {
  for (std::uint32_t a = 2; a < field.modulus(); ++a) {
    if (pred(Fp{a})) return Fp{a};
  }
  throw Error(ErrorKind::InvalidArgument, "no suitable non-residue");
}

Fp fermat_inverse(const PrimeField& field, Fp a, MultCounter& ctr) {
  if (a.v == 0) throw Error(ErrorKind::ZeroInverse, "division by zero");
  return field.pow(a, field.modulus() - 2, ctr);
}

}  // namespace

NonResidueTable NonResidueTable::smallest(const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  NonResidueTable nr;
  nr.alpha2 = smallest_matching(
      field, [&](Fp a) { return field.euler_criterion(a) == QuadraticCharacter::nonresidue; });
  // Any quadratic nonresidue generates the cyclic quotient F*/F*^4.
  nr.alpha4 = nr.alpha2;
  if (p % 3 == 1) {
    nr.alpha6 = smallest_matching(field, [&](Fp a) { return is_sextic_generator(field, a); });
  } else {
    nr.alpha6 = nr.alpha2;
  }
  return nr;
}

Fp j1728(const PrimeField& field) { return field.element(1728); }

int twist_count(const PrimeField& field, Fp j) {
  const std::uint32_t p = field.modulus();
  if (j == j1728(field)) return p % 4 == 1 ? 4 : 2;
  if (j.v == 0) return p % 3 == 1 ? 6 : 2;
  return 2;
}

void validate_class(const PrimeField& field, const CurveClass& c) {
  if (c.j.v >= field.modulus() || c.b < 0 || c.b >= twist_count(field, c.j)) {
    throw Error(ErrorKind::InvalidClass,
                "(j=" + std::to_string(c.j.v) + ", b=" + std::to_string(c.b) + ") is not a legal class");
  }
}

bool is_singular(const PrimeField& field, Fp A, Fp B) {
  Fp a3 = field.mul(field.mul(A, A), A);
  Fp b2 = field.mul(B, B);
  Fp disc = field.add(field.mul(field.element(4), a3), field.mul(field.element(27), b2));
  return disc.v == 0;
}

WeierstrassCurve make_curve(const PrimeField& field, Fp A, Fp B) {
  if (is_singular(field, A, B)) {
    throw Error(ErrorKind::SingularCurve,
                "4A^3 + 27B^2 = 0 for A=" + std::to_string(A.v) + ", B=" + std::to_string(B.v));
  }
  return {A, B};
}

Fp j_invariant(const PrimeField& field, const WeierstrassCurve& E) {
  Fp a3 = field.mul(field.mul(E.A, E.A), E.A);
  Fp four_a3 = field.mul(field.element(4), a3);
  Fp denom = field.add(four_a3, field.mul(field.element(27), field.mul(E.B, E.B)));
  return field.mul(field.mul(field.element(1728), four_a3), field.inv(denom));
}

std::uint64_t class_count(const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  return 2 * p + (p % 4 == 1 ? 2 : 0) + (p % 3 == 1 ? 4 : 0);
}

std::vector<CurveClass> enumerate_classes(const PrimeField& field) {
  std::vector<CurveClass> out;
  out.reserve(class_count(field));
  for (std::uint32_t j = 0; j < field.modulus(); ++j) {
    const int n = twist_count(field, Fp{j});
    for (int b = 0; b < n; ++b) out.push_back({Fp{j}, b});
  }
  return out;
}

WeierstrassCurve get_weierstrass_pair(const PrimeField& field, const CurveClass& c,
                                      const NonResidueTable& nr, MultCounter& ctr) {
  validate_class(field, c);
  const auto b = static_cast<std::uint64_t>(c.b);
  if (c.j == j1728(field)) return {field.pow(nr.alpha4, b, ctr), field.zero()};
  if (c.j.v == 0) return {field.zero(), field.pow(nr.alpha6, b, ctr)};

  Fp scale = fermat_inverse(field, field.sub(j1728(field), c.j), ctr);
  Fp j_over = field.mul(c.j, scale, ctr);
  Fp a2b = field.pow(nr.alpha2, 2 * b, ctr);
  Fp a3b = field.pow(nr.alpha2, 3 * b, ctr);
  Fp A = field.mul(field.mul(field.element(3), j_over, ctr), a2b, ctr);
  Fp B = field.mul(field.mul(field.element(2), j_over, ctr), a3b, ctr);
  return {A, B};
}

WeierstrassCurve get_weierstrass_pair(const PrimeField& field, const CurveClass& c,
                                      const NonResidueTable& nr) {
  MultCounter scratch;
  return get_weierstrass_pair(field, c, nr, scratch);
}

Fp curve_rhs(const PrimeField& field, const WeierstrassCurve& E, Fp x, MultCounter& ctr) {
  Fp x2 = field.mul(x, x, ctr);
  Fp x3 = field.mul(x2, x, ctr);
  return field.add(field.add(x3, field.mul(E.A, x, ctr)), E.B);
}

Fp curve_rhs(const PrimeField& field, const WeierstrassCurve& E, Fp x) {
  MultCounter scratch;
  return curve_rhs(field, E, x, scratch);
}

bool is_on_curve(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P) {
  if (P.infinity) return true;
  return field.mul(P.y, P.y) == curve_rhs(field, E, P.x);
}

std::uint64_t count_points(const PrimeField& field, const WeierstrassCurve& E,
                           const SquareRootTable& roots) {
  std::int64_t total = 1;
  for (std::uint32_t x = 0; x < field.modulus(); ++x) {
    total += 1 + roots.chi(curve_rhs(field, E, Fp{x}));
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_points(const PrimeField& field, const WeierstrassCurve& E) {
  std::int64_t total = 1;
  for (std::uint32_t x = 0; x < field.modulus(); ++x) {
    switch (field.euler_criterion(curve_rhs(field, E, Fp{x}))) {
      case QuadraticCharacter::zero: total += 1; break;
      case QuadraticCharacter::residue: total += 2; break;
      case QuadraticCharacter::nonresidue: break;
    }
  }
  return static_cast<std::uint64_t>(total);
}

bool in_hasse_interval(std::uint64_t p, std::int64_t n) {
  const std::int64_t t = n - static_cast<std::int64_t>(p) - 1;
  return t * t <= 4 * static_cast<std::int64_t>(p);
}

CurvePoint negate(const PrimeField& field, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, field.neg(P.y));
}

CurvePoint add(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P,
               const CurvePoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  Fp lambda;
  if (P.x == Q.x) {
    if (field.add(P.y, Q.y).v == 0) return CurvePoint::at_infinity();
    // Tangent: (3x^2 + A) / 2y.
    Fp num = field.add(field.mul(field.element(3), field.mul(P.x, P.x)), E.A);
    lambda = field.mul(num, field.inv(field.add(P.y, P.y)));
  } else {
    lambda = field.mul(field.sub(Q.y, P.y), field.inv(field.sub(Q.x, P.x)));
  }
  Fp x3 = field.sub(field.sub(field.mul(lambda, lambda), P.x), Q.x);
  Fp y3 = field.sub(field.mul(lambda, field.sub(P.x, x3)), P.y);
  return CurvePoint::affine(x3, y3);
}

CurvePoint scalar_mul(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P,
                      std::int64_t k) {
  CurvePoint base = k < 0 ? negate(field, P) : P;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  CurvePoint acc = CurvePoint::at_infinity();
  while (n != 0) {
    if (n & 1U) acc = add(field, E, acc, base);
    base = add(field, E, base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<CurvePoint> rational_points(const PrimeField& field, const WeierstrassCurve& E,
                                        const SquareRootTable& roots) {
  std::vector<CurvePoint> pts;
  for (std::uint32_t x = 0; x < field.modulus(); ++x) {
    Fp w = curve_rhs(field, E, Fp{x});
    auto y = roots.sqrt(w);
    if (!y) continue;
    pts.push_back(CurvePoint::affine(Fp{x}, *y));
    if (y->v != 0) pts.push_back(CurvePoint::affine(Fp{x}, field.neg(*y)));
  }
  return pts;
}

WeierstrassCurve quadratic_twist(const PrimeField& field, const WeierstrassCurve& E, Fp alpha) {
  if (field.euler_criterion(alpha) != QuadraticCharacter::nonresidue) {
    throw Error(ErrorKind::NotANonResidue, std::to_string(alpha.v) + " is not a quadratic nonresidue");
  }
  Fp inv = field.inv(alpha);
  Fp inv2 = field.mul(inv, inv);
  Fp inv3 = field.mul(inv2, inv);
  return {field.mul(inv2, E.A), field.mul(inv3, E.B)};
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

std::uint64_t order_with(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P,
                         std::uint64_t n, const std::vector<std::pair<std::uint64_t, int>>& fac) {
  std::uint64_t order = n;
  for (auto [q, e] : fac) {
    for (int i = 0; i < e && order % q == 0; ++i) {
      if (!scalar_mul(field, E, P, static_cast<std::int64_t>(order / q)).infinity) break;
      order /= q;
    }
  }
  return order;
}

}  // namespace

std::uint64_t point_order(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P,
                          std::uint64_t n) {
  return order_with(field, E, P, n, factorize(n));
}

GroupStructure group_structure(const PrimeField& field, const WeierstrassCurve& E,
                               const SquareRootTable& roots) {
  const std::uint64_t n = count_points(field, E, roots);
  const auto fac = factorize(n);
  const std::uint64_t p = field.modulus();

  // Possible exponents n/m with m^2 | n and m | p - 1; stop once the running
  // lcm cannot grow into a larger candidate.
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t m = 1; m * m <= n; ++m) {
    if (n % (m * m) == 0 && (p - 1) % m == 0) candidates.push_back(n / m);
  }
  auto can_grow = [&](std::uint64_t lcm) {
    return std::any_of(candidates.begin(), candidates.end(),
                       [&](std::uint64_t e) { return e > lcm && e % lcm == 0; });
  };

  std::uint64_t exponent = 1;
  for (const auto& P : rational_points(field, E, roots)) {
    if (!can_grow(exponent)) break;
    if (scalar_mul(field, E, P, static_cast<std::int64_t>(exponent)).infinity) continue;
    exponent = std::lcm(exponent, order_with(field, E, P, n, fac));
  }
  const std::uint64_t m = n / exponent;
  return {m, exponent / m};
}

GroupStructure group_structure(const PrimeField& field, const WeierstrassCurve& E) {
  return group_structure(field, E, SquareRootTable(field));
}

std::vector<CurveRecord> build_curve_table(const PrimeField& field, const NonResidueTable& nr,
                                           bool with_structure) {
  SquareRootTable roots(field);
  std::vector<CurveRecord> table;
  for (const auto& c : enumerate_classes(field)) {
    CurveRecord rec;
    rec.cls = c;
    rec.curve = get_weierstrass_pair(field, c, nr);
    rec.cardinality = count_points(field, rec.curve, roots);
    if (with_structure) rec.structure = group_structure(field, rec.curve, roots);
    table.push_back(rec);
  }
  return table;
}

void write_curve_table_csv(std::ostream& out, const std::vector<CurveRecord>& table) {
  out << "j,b,A,B,cardinality,m,k\n";
  for (const auto& r : table) {
    out << r.cls.j.v << ',' << r.cls.b << ',' << r.curve.A.v << ',' << r.curve.B.v << ','
        << r.cardinality << ',';
    if (r.structure) out << r.structure->m << ',' << r.structure->k;
    else out << ',';
    out << '\n';
  }
}

std::vector<CurveRecord> read_curve_table_csv(std::istream& in, const PrimeField& field) {
  std::string line;
  if (!std::getline(in, line) || line != "j,b,A,B,cardinality,m,k") {
    throw Error(ErrorKind::InvalidArgument, "curve table: missing or wrong header");
  }
  std::vector<CurveRecord> table;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(cell);
    if (!line.empty() && line.back() == ',') cols.emplace_back();
    if (cols.size() != 7) {
      throw Error(ErrorKind::InvalidArgument, "curve table: line " + std::to_string(lineno) +
                                                  " has " + std::to_string(cols.size()) + " columns");
    }
    try {
      auto num = [](const std::string& s) { return std::stoull(s); };
      CurveRecord r;
      r.cls = {field.element(static_cast<std::int64_t>(num(cols[0]))), static_cast<int>(num(cols[1]))};
      validate_class(field, r.cls);
      r.curve = make_curve(field, field.element(static_cast<std::int64_t>(num(cols[2]))),
                           field.element(static_cast<std::int64_t>(num(cols[3]))));
      r.cardinality = num(cols[4]);
      if (!cols[5].empty() || !cols[6].empty()) r.structure = GroupStructure{num(cols[5]), num(cols[6])};
      table.push_back(r);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "curve table: bad number on line " + std::to_string(lineno));
    }
  }
  return table;
}

}  // namespace twistforge
