#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twistforge/classnum.hpp"
#include "twistforge/curves.hpp"
#include "twistforge/forgery.hpp"
#include "twistforge/grover.hpp"

namespace twistforge {

/// Classical banknote: the serial number plus every class of that
/// cardinality, standing in for the uniform superposition over them.
struct Banknote {
  std::uint64_t p = 0;
  SerialNumber serial;
  std::vector<CurveClass> support;
};

/// Uniform integer in [0, n) by rejection on raw mt19937_64 output, so the
/// draws are identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Mint against a precomputed curve table: draw classes uniformly until the
/// cardinality passes the Frobenius acceptance test, then collect the
/// support. Throws Error(Exhausted) after 10 * table.size() rejected draws.
Banknote mint(const PrimeField& field, const std::vector<CurveRecord>& table, std::uint64_t seed);
Banknote mint(std::uint64_t p, std::uint64_t seed);

/// Same decision function as oracle_predicate.
int check_serial(const PrimeField& field, const NonResidueTable& nr, const CurveClass& c,
                 const SerialNumber& s, const OracleConfig& cfg);

/// True when every support class has cardinality sigma, no other class does,
/// and sigma passes the acceptance test.
bool verify_banknote(const PrimeField& field, const NonResidueTable& nr, const Banknote& note);

struct ForgeryReport {
  SearchPlan plan;
  SearchResult search;
  CurveClass sampled;
  /// check_serial on the measured class.
  bool sample_verified = false;
  /// Forged note; its support is the oracle's marked set.
  Banknote note;
};

/// Grover forgery of serial s. With use_exact_count the plan uses the size
/// of the marked set; otherwise it falls back to the class-number bounds.
/// Throws Error(NoTarget) when no class is marked.
ForgeryReport forge(const PrimeField& field, const NonResidueTable& nr, const SerialNumber& s,
                    const OracleConfig& cfg, std::uint64_t seed, bool use_exact_count = true);

/// {"p": "...", "sigma": "...", "support": [{"j": "...", "b": "..."}]} with
/// integers as decimal strings.
std::string banknote_to_json(const Banknote& note);
/// Accepts decimal strings or JSON numbers. Throws Error(InvalidArgument) on
/// malformed input, Error(InvalidSerial) or Error(InvalidClass) on bad values.
Banknote banknote_from_json(const std::string& text);

}  // namespace twistforge
