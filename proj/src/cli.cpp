#include "twistforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "twistforge/classnum.hpp"
#include "twistforge/curves.hpp"
#include "twistforge/error.hpp"
#include "twistforge/estimator.hpp"
#include "twistforge/forgery.hpp"
#include "twistforge/grover.hpp"
#include "twistforge/scheme.hpp"

namespace twistforge {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::uint64_t p = 0;
  std::optional<std::uint64_t> sigma;
  std::optional<std::uint64_t> tau;
  std::string mode = "strict_or";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string cache_dir;
  std::optional<std::uint64_t> j;
  std::optional<int> b;
  std::optional<std::uint32_t> bits;
  std::uint64_t trials = 0;
  bool structure = false;
  bool bounds_plan = false;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string cache_directory(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("TWISTFORGE_CACHE")) return env;
  return {};
}

std::vector<CurveRecord> load_table(const PrimeField& field, const NonResidueTable& nr,
                                    const RunConfig& cfg, bool with_structure, std::ostream& err) {
  const std::string dir = cache_directory(cfg);
  std::filesystem::path path;
  if (!dir.empty()) {
    path = std::filesystem::path(dir) /
           ("curves_" + str(field.modulus()) + (with_structure ? "_structure" : "") + ".csv");
    std::ifstream in(path);
    if (in) {
      try {
        return read_curve_table_csv(in, field);
      } catch (const Error& e) {
        err << "ignoring unreadable cache " << path.string() << ": " << e.what() << '\n';
      }
    }
  }
  auto table = build_curve_table(field, nr, with_structure);
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream cache(path);
    if (cache) {
      write_curve_table_csv(cache, table);
    } else {
      err << "cannot write cache " << path.string() << '\n';
    }
  }
  return table;
}

std::uint64_t require_sigma(const RunConfig& cfg) {
  if (!cfg.sigma) throw Error(ErrorKind::InvalidArgument, "--sigma is required");
  return *cfg.sigma;
}

OracleConfig oracle_config(const RunConfig& cfg) {
  OracleConfig oc = OracleConfig::for_prime(cfg.p, parse_mode(cfg.mode));
  if (cfg.tau) {
    if (*cfg.tau == 0) throw Error(ErrorKind::InvalidArgument, "--tau must be positive");
    oc.tau = *cfg.tau;
  }
  return oc;
}

bool csv(const RunConfig& cfg) { return cfg.format == "csv"; }

int run_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PrimeField field(cfg.p);
  const auto nr = NonResidueTable::smallest(field);
  const auto table = load_table(field, nr, cfg, cfg.structure, err);
  if (csv(cfg)) {
    write_curve_table_csv(out, table);
    return kExitOk;
  }
  for (const auto& rec : table) {
    Json row;
    row["j"] = str(rec.cls.j.v);
    row["b"] = str(rec.cls.b);
    row["A"] = str(rec.curve.A.v);
    row["B"] = str(rec.curve.B.v);
    row["cardinality"] = str(rec.cardinality);
    if (rec.structure) {
      row["m"] = str(rec.structure->m);
      row["k"] = str(rec.structure->k);
    }
    out << row.dump() << '\n';
  }
  return kExitOk;
}

int run_mint(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PrimeField field(cfg.p);
  const auto nr = NonResidueTable::smallest(field);
  const Banknote note = mint(field, load_table(field, nr, cfg, false, err), cfg.seed);
  if (csv(cfg)) {
    out << "p,sigma,j,b\n";
    for (const auto& c : note.support) {
      out << note.p << ',' << note.serial.sigma() << ',' << c.j.v << ',' << c.b << '\n';
    }
    return kExitOk;
  }
  out << banknote_to_json(note) << '\n';
  return kExitOk;
}

int run_check_serial(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const SerialNumber s(cfg.p, require_sigma(cfg));
  if (!cfg.j || !cfg.b) throw Error(ErrorKind::InvalidArgument, "--j and --b are required");
  if (*cfg.j >= cfg.p) throw Error(ErrorKind::InvalidClass, "--j must be below p");
  const CurveClass c{Fp{static_cast<std::uint32_t>(*cfg.j)}, *cfg.b};
  validate_class(field, c);
  const OracleConfig oc = oracle_config(cfg);
  const int bit = check_serial(field, NonResidueTable::smallest(field), c, s, oc);
  if (csv(cfg)) {
    out << "p,sigma,j,b,pass\n" << cfg.p << ',' << s.sigma() << ',' << c.j.v << ',' << c.b << ',' << bit << '\n';
  } else {
    Json row;
    row["pass"] = str(bit);
    out << row.dump() << '\n';
  }
  return kExitOk;
}

int run_forge(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const SerialNumber s(cfg.p, require_sigma(cfg));
  const OracleConfig oc = oracle_config(cfg);
  const auto rep = forge(field, NonResidueTable::smallest(field), s, oc, cfg.seed, !cfg.bounds_plan);
  if (csv(cfg)) {
    out << "p,sigma,N,M,basis,iterations,queries,success,predicted,sample_j,sample_b,verified\n"
        << cfg.p << ',' << s.sigma() << ',' << rep.plan.N << ',' << format_real(rep.plan.M) << ','
        << to_string(rep.plan.basis) << ',' << rep.plan.iterations << ',' << rep.search.oracle_queries << ','
        << format_real(rep.search.success_probability) << ',' << format_real(rep.plan.predicted_success) << ','
        << rep.sampled.j.v << ',' << rep.sampled.b << ',' << (rep.sample_verified ? 1 : 0) << '\n';
    return kExitOk;
  }
  Json row;
  row["p"] = str(cfg.p);
  row["sigma"] = str(s.sigma());
  row["N"] = str(rep.plan.N);
  row["M"] = format_real(rep.plan.M);
  row["marked"] = str(rep.note.support.size());
  row["basis"] = to_string(rep.plan.basis);
  row["iterations"] = str(rep.plan.iterations);
  row["queries"] = str(rep.search.oracle_queries);
  row["success"] = format_real(rep.search.success_probability);
  row["predicted"] = format_real(rep.plan.predicted_success);
  row["sqrt_2p_over_h"] = format_real(rep.plan.sqrt_2p_over_h);
  row["iter_lo"] = format_real(rep.plan.sandwich_lower);
  row["iter_hi"] = format_real(rep.plan.sandwich_upper);
  row["sample"] = Json{{"j", str(rep.sampled.j.v)}, {"b", str(rep.sampled.b)}};
  row["verified"] = rep.sample_verified ? "1" : "0";
  out << row.dump() << '\n';
  return kExitOk;
}

int run_classnum(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const std::uint64_t sigma = require_sigma(cfg);
  if (!in_hasse_interval(cfg.p, static_cast<std::int64_t>(sigma))) {
    throw Error(ErrorKind::InvalidSerial, "sigma=" + str(sigma) + " is outside the Hasse interval");
  }
  const auto r = class_number_report(cfg.p, sigma);
  const std::string h = r.h ? str(*r.h) : "";
  const std::string it = r.iterations_exact ? format_real(*r.iterations_exact) : "";
  if (csv(cfg)) {
    out << "p,sigma,trace,d,fundamental,accepted,h,tatuzawa_lo,tatuzawa_valid,l_upper,h_upper,iter,iter_lo,"
           "iter_hi,log_base\n"
        << cfg.p << ',' << sigma << ',' << r.frobenius.trace << ',' << r.frobenius.disc.d << ','
        << (r.frobenius.disc.is_fundamental ? 1 : 0) << ',' << (r.frobenius.accepted() ? 1 : 0) << ',' << h
        << ',' << format_real(r.tatuzawa_lower) << ',' << (r.tatuzawa_valid ? 1 : 0) << ','
        << format_real(r.l_upper) << ',' << format_real(r.h_upper) << ',' << it << ','
        << format_real(r.iteration_lower) << ',' << format_real(r.iteration_upper) << ",e\n";
    return kExitOk;
  }
  Json row;
  row["p"] = str(cfg.p);
  row["sigma"] = str(sigma);
  row["trace"] = std::to_string(r.frobenius.trace);
  row["d"] = std::to_string(r.frobenius.disc.d);
  row["fundamental"] = r.frobenius.disc.is_fundamental ? "1" : "0";
  row["accepted"] = r.frobenius.accepted() ? "1" : "0";
  row["h"] = h;
  row["tatuzawa_lo"] = format_real(r.tatuzawa_lower);
  row["tatuzawa_valid"] = r.tatuzawa_valid ? "1" : "0";
  row["l_upper"] = format_real(r.l_upper);
  row["h_upper"] = format_real(r.h_upper);
  row["iter"] = it;
  row["iter_lo"] = format_real(r.iteration_lower);
  row["iter_hi"] = format_real(r.iteration_upper);
  row["log_base"] = "e";
  out << row.dump() << '\n';
  return kExitOk;
}

int run_bounds(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const auto pd = static_cast<double>(cfg.p);
  const IterationBounds it = iteration_bounds(pd);
  if (csv(cfg)) {
    out << "p,tatuzawa_lo,h_upper,iter_lo,iter_hi\n"
        << cfg.p << ',' << format_real(tatuzawa_lower_bound(pd)) << ','
        << format_real(class_number_upper_bound(pd)) << ',' << format_real(it.lower) << ','
        << format_real(it.upper) << '\n';
    return kExitOk;
  }
  Json row;
  row["p"] = str(cfg.p);
  row["tatuzawa_lo"] = format_real(tatuzawa_lower_bound(pd));
  row["h_upper"] = format_real(class_number_upper_bound(pd));
  row["iter_lo"] = format_real(it.lower);
  row["iter_hi"] = format_real(it.upper);
  out << row.dump() << '\n';
  return kExitOk;
}

int run_estimate(const RunConfig& cfg, std::ostream& out) {
  ResourceReport r;
  if (cfg.bits) {
    r = estimate_bits(*cfg.bits);
  } else if (cfg.p != 0) {
    r = estimate_prime(cfg.p);
  } else {
    throw Error(ErrorKind::InvalidArgument, "estimate needs --bits or --p");
  }
  if (csv(cfg)) {
    out << kReportCsvHeader << '\n' << report_csv_row(r) << '\n';
  } else {
    out << report_json(r) << '\n';
  }
  return kExitOk;
}

int run_audit(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const SerialNumber s(cfg.p, require_sigma(cfg));
  const OracleConfig oc = oracle_config(cfg);
  const AuditRow a = audit(field, NonResidueTable::smallest(field), s, oc.tau);
  if (csv(cfg)) {
    out << kAuditCsvHeader << '\n' << audit_csv_row(a) << '\n';
  } else {
    out << audit_json(a) << '\n';
  }
  return kExitOk;
}

int run_fp_experiment(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const SerialNumber s(cfg.p, require_sigma(cfg));
  const std::uint64_t tau_max = oracle_config(cfg).tau;
  std::vector<std::uint64_t> taus;
  for (std::uint64_t t = 1; t <= tau_max; ++t) taus.push_back(t);
  const auto rows =
      false_positive_experiment(field, NonResidueTable::smallest(field), s, taus, cfg.trials, cfg.seed);
  if (csv(cfg)) out << "p,sigma,tau,samples,zero_strict,zero_sum,rate_strict,rate_sum,bound\n";
  for (const auto& r : rows) {
    if (csv(cfg)) {
      out << cfg.p << ',' << s.sigma() << ',' << r.tau << ',' << r.samples << ',' << r.zero_strict << ','
          << r.zero_sum << ',' << format_real(r.rate_strict) << ',' << format_real(r.rate_sum) << ','
          << format_real(r.bound) << '\n';
      continue;
    }
    Json row;
    row["p"] = str(cfg.p);
    row["sigma"] = str(s.sigma());
    row["tau"] = str(r.tau);
    row["samples"] = str(r.samples);
    row["zero_strict"] = str(r.zero_strict);
    row["zero_sum"] = str(r.zero_sum);
    row["rate_strict"] = format_real(r.rate_strict);
    row["rate_sum"] = format_real(r.rate_sum);
    row["bound"] = format_real(r.bound);
    out << row.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Division-polynomial forgery lab for class-group-action quantum money", "twistforge"};
  app.require_subcommand(1, 1);

  const auto add_common = [&](CLI::App* sub, bool needs_p) {
    auto* opt = sub->add_option("--p", cfg.p, "prime modulus, 5 <= p < 2^31");
    if (needs_p) opt->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    return sub;
  };
  const auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--sigma", cfg.sigma, "serial number (target cardinality)");
    sub->add_option("--tau", cfg.tau, "evaluation points per oracle call (default 3 ceil(log2 p))");
    sub->add_option("--mode", cfg.mode, "aggregation mode")->check(CLI::IsMember({"strict_or", "paper_sum"}));
  };

  auto* enumerate = add_common(app.add_subcommand("enumerate", "curve table for every (j, b) class"), true);
  enumerate->add_option("--cache-dir", cfg.cache_dir, "curve-table cache directory");
  enumerate->add_flag("--structure", cfg.structure, "include the group structure Z/m x Z/mk");

  auto* mint_cmd = add_common(app.add_subcommand("mint", "mint a banknote"), true);
  mint_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  mint_cmd->add_option("--cache-dir", cfg.cache_dir, "curve-table cache directory");

  auto* check = add_common(app.add_subcommand("check-serial", "serial-number check for one class"), true);
  add_oracle(check);
  check->add_option("--j", cfg.j, "j-invariant");
  check->add_option("--b", cfg.b, "twist index");

  auto* forge_cmd = add_common(app.add_subcommand("forge-sim", "simulated Grover forgery"), true);
  add_oracle(forge_cmd);
  forge_cmd->add_option("--seed", cfg.seed, "64-bit measurement seed");
  forge_cmd->add_flag("--bounds-plan", cfg.bounds_plan, "plan from class-number bounds instead of the marked count");

  auto* classnum = add_common(app.add_subcommand("classnum", "class number and bounds for one sigma"), true);
  classnum->add_option("--sigma", cfg.sigma, "target cardinality");

  add_common(app.add_subcommand("bounds", "class-number and iteration bounds"), true);

  auto* estimate = add_common(app.add_subcommand("estimate", "closed-form resource report"), false);
  estimate->add_option("--bits", cfg.bits, "bit length n");

  auto* audit_cmd = add_common(app.add_subcommand("audit", "measured multiplications against the budget"), true);
  add_oracle(audit_cmd);

  auto* fp = add_common(app.add_subcommand("fp-experiment", "false-positive rate of F per tau"), true);
  add_oracle(fp);
  fp->add_option("--trials", cfg.trials, "random starts per class (0 = every x)");
  fp->add_option("--seed", cfg.seed, "64-bit seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "enumerate") return run_enumerate(cfg, out, err);
    if (name == "mint") return run_mint(cfg, out, err);
    if (name == "check-serial") return run_check_serial(cfg, out);
    if (name == "forge-sim") return run_forge(cfg, out);
    if (name == "classnum") return run_classnum(cfg, out);
    if (name == "bounds") return run_bounds(cfg, out);
    if (name == "estimate") return run_estimate(cfg, out);
    if (name == "audit") return run_audit(cfg, out);
    if (name == "fp-experiment") return run_fp_experiment(cfg, out);
    err << "error: unknown subcommand " << name << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_validation() ? kExitUsage : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace twistforge
