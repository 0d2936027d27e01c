#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "twistforge/fp.hpp"

namespace twistforge {

/// F_p-isomorphism class label (j, b): j is the j-invariant, b selects the
/// twist. b is in {0,1} except at j = 1728 (p = 1 mod 4, b < 4) and j = 0
/// (p = 1 mod 3, b < 6).
struct CurveClass {
  Fp j;
  int b = 0;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// y^2 = x^3 + A x + B with 4A^3 + 27B^2 != 0.
struct WeierstrassCurve {
  Fp A;
  Fp B;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

struct CurvePoint {
  bool infinity = true;
  Fp x;
  Fp y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(Fp x, Fp y) { return {false, x, y}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Twisting constants for GetWeierstrassPair. alpha2 is a quadratic
/// nonresidue; alpha4 generates F_p^*/(F_p^*)^4 when p = 1 mod 4 and alpha6
/// generates F_p^*/(F_p^*)^6 when p = 1 mod 3 (otherwise both equal alpha2).
/// Each is the smallest positive integer with its property.
struct NonResidueTable {
  Fp alpha2;
  Fp alpha4;
  Fp alpha6;

  static NonResidueTable smallest(const PrimeField& field);
};

/// E(F_p) = Z/m x Z/mk.
struct GroupStructure {
  std::uint64_t m = 1;
  std::uint64_t k = 1;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

Fp j1728(const PrimeField& field);

/// Number of legal b values for a given j.
int twist_count(const PrimeField& field, Fp j);

/// Throws Error(InvalidClass) when b is outside the legal range for j.
void validate_class(const PrimeField& field, const CurveClass& c);

/// Throws Error(SingularCurve) when 4A^3 + 27B^2 = 0.
WeierstrassCurve make_curve(const PrimeField& field, Fp A, Fp B);

bool is_singular(const PrimeField& field, Fp A, Fp B);

Fp j_invariant(const PrimeField& field, const WeierstrassCurve& E);

/// Every legal (j, b), lexicographic by (j, b).
std::vector<CurveClass> enumerate_classes(const PrimeField& field);

/// Expected length of enumerate_classes: 2p, +2 if p = 1 mod 4, +4 if p = 1 mod 3.
std::uint64_t class_count(const PrimeField& field);

/// Recover (A, B) from a class label. Divisions are performed by Fermat
/// exponentiation so that the counter reflects the full cost.
WeierstrassCurve get_weierstrass_pair(const PrimeField& field, const CurveClass& c,
                                      const NonResidueTable& nr, MultCounter& ctr);
WeierstrassCurve get_weierstrass_pair(const PrimeField& field, const CurveClass& c,
                                      const NonResidueTable& nr);

/// x^3 + A x + B.
Fp curve_rhs(const PrimeField& field, const WeierstrassCurve& E, Fp x);
Fp curve_rhs(const PrimeField& field, const WeierstrassCurve& E, Fp x, MultCounter& ctr);

bool is_on_curve(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P);

/// #E(F_p) by character sum over x.
std::uint64_t count_points(const PrimeField& field, const WeierstrassCurve& E);
std::uint64_t count_points(const PrimeField& field, const WeierstrassCurve& E,
                           const SquareRootTable& roots);

/// Hasse interval check |n - p - 1| <= 2 sqrt(p), exact in integers.
bool in_hasse_interval(std::uint64_t p, std::int64_t n);

CurvePoint negate(const PrimeField& field, const CurvePoint& P);
CurvePoint add(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P,
               const CurvePoint& Q);
CurvePoint scalar_mul(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P,
                      std::int64_t k);

/// All affine points, ordered by x then y.
std::vector<CurvePoint> rational_points(const PrimeField& field, const WeierstrassCurve& E,
                                        const SquareRootTable& roots);

/// (alpha^-2 A, alpha^-3 B). Throws Error(NotANonResidue) if alpha is zero or
/// a square.
WeierstrassCurve quadratic_twist(const PrimeField& field, const WeierstrassCurve& E, Fp alpha);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Order of P in a group of known cardinality n.
std::uint64_t point_order(const PrimeField& field, const WeierstrassCurve& E, const CurvePoint& P,
                          std::uint64_t n);

/// Exhaustive structure computation from the exponent of E(F_p).
GroupStructure group_structure(const PrimeField& field, const WeierstrassCurve& E);
GroupStructure group_structure(const PrimeField& field, const WeierstrassCurve& E,
                               const SquareRootTable& roots);

struct CurveRecord {
  CurveClass cls;
  WeierstrassCurve curve;
  std::uint64_t cardinality = 0;
  std::optional<GroupStructure> structure;
};

/// One record per class, in enumeration order.
std::vector<CurveRecord> build_curve_table(const PrimeField& field, const NonResidueTable& nr,
                                           bool with_structure = false);

/// CSV with header `j,b,A,B,cardinality,m,k`, decimal values. Rows without a
/// structure leave m and k empty.
void write_curve_table_csv(std::ostream& out, const std::vector<CurveRecord>& table);

/// Throws Error(InvalidArgument) on malformed input.
std::vector<CurveRecord> read_curve_table_csv(std::istream& in, const PrimeField& field);

}  // namespace twistforge
