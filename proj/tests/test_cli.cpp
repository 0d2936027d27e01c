#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "twistforge/cli.hpp"
#include "twistforge/scheme.hpp"

using namespace twistforge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("mint prints a banknote") {
    const auto r = run({"mint", "--p", "101", "--seed", "0"});
    CHECK(r.code == 0);
    const auto note = banknote_from_json(r.out);
    CHECK(note.p == 101);
    CHECK_FALSE(note.support.empty());
    CHECK(run({"mint", "--p", "101", "--seed", "0"}).out == r.out);
    const auto csv = run({"mint", "--p", "101", "--seed", "0", "--format", "csv"});
    CHECK(csv.out.rfind("p,sigma,j,b\n", 0) == 0);
  }

  TEST_CASE("check-serial agrees with point counting") {
    const PrimeField f(101);
    const auto table = build_curve_table(f, NonResidueTable::smallest(f));
    for (const auto& rec : table) {
      if (rec.cls.j.v > 10) break;
      const auto r = run({"check-serial", "--p", "101", "--sigma", "107", "--j", std::to_string(rec.cls.j.v), "--b",
                          std::to_string(rec.cls.b)});
      CHECK(r.code == 0);
      CHECK(r.out == (rec.cardinality == 107 ? "{\"pass\":\"1\"}\n" : "{\"pass\":\"0\"}\n"));
    }
  }

  TEST_CASE("estimate prints the headline row") {
    const auto r = run({"estimate", "--bits", "256"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"mults_ours\":\"127401984\"") != std::string::npos);
    CHECK(r.out.find("\"qubits_ours\":\"786432\"") != std::string::npos);
    const auto c = run({"estimate", "--bits", "256", "--format", "csv"});
    CHECK(c.out.rfind("bits,mults_ours,mults_bf,qubits_ours,qubits_bf,iter_lo,iter_hi,total_lo,total_hi\n256,127401984,", 0) == 0);
  }

  TEST_CASE("other subcommands run") {
    CHECK(run({"classnum", "--p", "101", "--sigma", "107"}).out.find("\"h\":\"3\"") != std::string::npos);
    CHECK(run({"bounds", "--p", "101"}).code == 0);
    CHECK(run({"forge-sim", "--p", "101", "--sigma", "107", "--seed", "3"}).code == 0);
    CHECK(run({"audit", "--p", "101", "--sigma", "107"}).out.find("\"within_budget\":\"1\"") != std::string::npos);
    const auto fp = run({"fp-experiment", "--p", "101", "--sigma", "107", "--tau", "4", "--format", "csv"});
    CHECK(fp.code == 0);
    CHECK(std::count(fp.out.begin(), fp.out.end(), '\n') == 5);
    CHECK(run({"enumerate", "--p", "11"}).out.size() > 0);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("validation failures exit 2") {
    CHECK(run({"mint", "--p", "100"}).code == 2);
    CHECK(run({"check-serial", "--p", "101", "--sigma", "102", "--j", "5", "--b", "0"}).code == 2);
    CHECK(run({"check-serial", "--p", "101", "--sigma", "150", "--j", "5", "--b", "0"}).code == 2);
    CHECK(run({"check-serial", "--p", "101", "--sigma", "107", "--j", "5", "--b", "3"}).code == 2);
    CHECK(run({"forge-sim", "--p", "101"}).code == 2);
    CHECK(run({"estimate", "--bits", "4"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"mint", "--p", "101", "--format", "xml"}).code == 2);
    const auto r = run({"mint", "--p", "100"});
    CHECK(r.out.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }

  TEST_CASE("curve-table cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "twistforge_cli_cache_test";
    std::filesystem::remove_all(dir);
    const auto first = run({"enumerate", "--p", "37", "--format", "csv", "--cache-dir", dir.string()});
    CHECK(std::filesystem::exists(dir / "curves_37.csv"));
    const auto second = run({"enumerate", "--p", "37", "--format", "csv", "--cache-dir", dir.string()});
    CHECK(first.out == second.out);
    std::filesystem::remove_all(dir);
  }
}
