#include "twistforge/scheme.hpp"

#include <algorithm>
#include <json.hpp>

#include "twistforge/error.hpp"

namespace twistforge {

namespace {

std::vector<CurveClass> support_of(const std::vector<CurveRecord>& table, std::uint64_t sigma) {
  std::vector<CurveClass> out;
  for (const auto& rec : table) {
    if (rec.cardinality == sigma) out.push_back(rec.cls);
  }
  return out;
}

std::uint64_t parse_u64(const nlohmann::json& v, const char* field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x >= 0) return static_cast<std::uint64_t>(x);
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (!s.empty() && s.size() <= 19 && std::all_of(s.begin(), s.end(), [](char ch) {
          return ch >= '0' && ch <= '9';
        })) {
      return std::stoull(s);
    }
  }
  throw Error(ErrorKind::InvalidArgument,
              std::string("banknote field '") + field + "' must be a nonnegative decimal integer");
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  // 2^64 mod n; discarding draws below it leaves a multiple of n outcomes.
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r < threshold);
  return r % n;
}

Banknote mint(const PrimeField& field, const std::vector<CurveRecord>& table, std::uint64_t seed) {
  if (table.empty()) throw Error(ErrorKind::InvalidArgument, "curve table is empty");
  std::mt19937_64 rng(seed);
  const std::uint64_t cap = 10 * table.size();
  for (std::uint64_t draw = 0; draw < cap; ++draw) {
    const auto& rec = table[uniform_below(rng, table.size())];
    if (!SerialNumber::is_valid(field.modulus(), rec.cardinality)) continue;
    if (!frobenius_discriminant(field.modulus(), rec.cardinality).accepted()) continue;
    return Banknote{field.modulus(), SerialNumber(field.modulus(), rec.cardinality),
                    support_of(table, rec.cardinality)};
  }
  throw Error(ErrorKind::Exhausted, "no accepted cardinality after " + std::to_string(cap) +
                                        " draws over F_" + std::to_string(field.modulus()));
}

Banknote mint(std::uint64_t p, std::uint64_t seed) {
  const PrimeField field(p);
  return mint(field, build_curve_table(field, NonResidueTable::smallest(field)), seed);
}

int check_serial(const PrimeField& field, const NonResidueTable& nr, const CurveClass& c,
                 const SerialNumber& s, const OracleConfig& cfg) {
  return oracle_predicate(field, nr, c, s, cfg);
}

bool verify_banknote(const PrimeField& field, const NonResidueTable& nr, const Banknote& note) {
  if (note.p != field.modulus() || note.serial.p() != note.p) return false;
  if (!frobenius_discriminant(note.p, note.serial.sigma()).accepted()) return false;
  const auto table = build_curve_table(field, nr);
  auto expected = support_of(table, note.serial.sigma());
  auto got = note.support;
  const auto key = [](const CurveClass& a, const CurveClass& b) {
    return a.j.v != b.j.v ? a.j.v < b.j.v : a.b < b.b;
  };
  std::sort(expected.begin(), expected.end(), key);
  std::sort(got.begin(), got.end(), key);
  return expected == got;
}

ForgeryReport forge(const PrimeField& field, const NonResidueTable& nr, const SerialNumber& s,
                    const OracleConfig& cfg, std::uint64_t seed, bool use_exact_count) {
  const auto classes = enumerate_classes(field);
  const auto marked = marked_classes(field, nr, s, cfg);
  if (marked.empty()) {
    throw Error(ErrorKind::NoTarget, "oracle marks no class for sigma=" + std::to_string(s.sigma()));
  }
  const auto bounds = class_number_report(field.modulus(), s.sigma(), false);
  const auto plan = plan_iterations(field.modulus(), s,
                                    use_exact_count ? std::optional<std::uint64_t>(marked.size())
                                                    : std::nullopt,
                                    bounds);
  auto search = simulate_grover(classes.size(), marked, plan.iterations, seed);
  const CurveClass sampled = classes[search.sample];
  std::vector<CurveClass> support;
  for (std::size_t i : marked) support.push_back(classes[i]);
  const bool verified = check_serial(field, nr, sampled, s, cfg) == 1;
  return ForgeryReport{plan, std::move(search), sampled, verified,
                       Banknote{field.modulus(), s, std::move(support)}};
}

std::string banknote_to_json(const Banknote& note) {
  nlohmann::ordered_json support = nlohmann::ordered_json::array();
  for (const auto& c : note.support) {
    support.push_back(nlohmann::ordered_json{{"j", std::to_string(c.j.v)}, {"b", std::to_string(c.b)}});
  }
  nlohmann::ordered_json out;
  out["p"] = std::to_string(note.p);
  out["sigma"] = std::to_string(note.serial.sigma());
  out["support"] = support;
  return out.dump();
}

Banknote banknote_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("banknote is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("sigma") || !doc.contains("support") ||
      !doc["support"].is_array()) {
    throw Error(ErrorKind::InvalidArgument, "banknote needs p, sigma and a support array");
  }
  const std::uint64_t p = parse_u64(doc["p"], "p");
  const PrimeField field(p);
  SerialNumber serial(p, parse_u64(doc["sigma"], "sigma"));
  std::vector<CurveClass> support;
  for (const auto& item : doc["support"]) {
    if (!item.is_object() || !item.contains("j") || !item.contains("b")) {
      throw Error(ErrorKind::InvalidArgument, "support entries need j and b");
    }
    const std::uint64_t j = parse_u64(item["j"], "j");
    const std::uint64_t b = parse_u64(item["b"], "b");
    if (j >= p || b > 5) throw Error(ErrorKind::InvalidClass, "class label out of range");
    CurveClass c{Fp{static_cast<std::uint32_t>(j)}, static_cast<int>(b)};
    validate_class(field, c);
    support.push_back(c);
  }
  return Banknote{p, serial, std::move(support)};
}

}  // namespace twistforge
