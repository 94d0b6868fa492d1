#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "vca/cli.hpp"
#include "vca/instance.hpp"

using namespace vca;

namespace {

const ExtendedNatural inf = kInfinity;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(VCA_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("parse_instance examples") {
  const auto w = parse_instance("0 inf : 1\n2 0 : 1");
  CHECK(w == canonical_weights(Multicomplex(2, {Facet{0, inf}, Facet{2, 0}})));

  const auto g = parse_instance("1 1 : 1");
  CHECK(g.rows().size() == 1);
  CHECK(g.rows().front().facet == Facet{1, 1});

  CHECK_THROWS_AS(parse_instance("1 1 : 0"), WeightError);
}

TEST_CASE("parse_instance comments, blanks and case") {
  const auto w = parse_instance("# header\n\n  3 INF : 2   # trailing\n\n");
  CHECK(w.rows().front().facet == Facet{3, inf});
  CHECK(w.rows().front().weight == 2);
}

TEST_CASE("parse_instance errors") {
  CHECK_THROWS_AS(parse_instance("1 1 : 1\n1 : 1"), DimensionError);
  CHECK_THROWS_AS(parse_instance("1 1 : 1\n1 0 : 1"), AntichainError);
  CHECK_THROWS_AS(parse_instance("1 1 : 1\n1 1 : 2"), AntichainError);
  CHECK_THROWS_AS(parse_instance(""), EmptyComplexError);
  CHECK_THROWS_AS(parse_instance("1 1 1"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("1 1 : 1 : 1"), SyntaxError);
  CHECK_THROWS_AS(parse_instance("1 1 : -1"), SyntaxError);
  CHECK_THROWS_AS(parse_instance(" : 1"), SyntaxError);

  try {
    parse_instance("# comment\n1 1 : 1\n1 x : 1\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }
}

TEST_CASE("format then parse round-trips") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = oracle::random_complex(rng, 1 + trial % 4, 3, 5, 0.2, 4);
    CHECK(parse_instance(format_instance(w)) == w);
  }
}

TEST_CASE("order subcommand") {
  const auto r = run({"order", data("ex11.vca"), "--vector", "1,1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "2\n");

  CHECK(run({"order", data("mixed.vca"), "--vector", "0,0,1"}).out == "inf\n");
  const auto j = nlohmann::json::parse(run({"order", data("mixed.vca"), "--vector", "0,0,1", "--json"}).out);
  CHECK(j["order"] == "inf");

  CHECK(run({"order", data("ex11.vca"), "--vector", "1"}).code == cli::kExitUsage);
  CHECK(run({"order", data("ex11.vca"), "--vector", "1,a"}).code == cli::kExitUsage);
}

TEST_CASE("covers subcommand") {
  const auto r = run({"covers", data("ex17.vca"), "-k", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "0 2\n1 1\n2 0\n");

  const auto j = nlohmann::json::parse(run({"covers", data("ex11.vca"), "-k", "3", "--json"}).out);
  CHECK(j["degree"] == 3);
  CHECK(j["covers"] == nlohmann::json::array({{2, 1}}));
}

TEST_CASE("generators subcommand on the non-finitely generated example") {
  const auto r = run({"generators", data("ex11.vca"), "--horizon", "5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("no finite certificate within horizon") != std::string::npos);
  CHECK(r.out.find("new generators: 5 (max degree 5)") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"generators", data("ex11.vca"), "--horizon", "5", "--json"}).out);
  CHECK(j["horizon"] == 5);
  CHECK(j["certified_bound"].is_null());
  REQUIRE(j["degrees"].size() == 5);
  for (const auto& d : j["degrees"]) {
    CHECK(d["new_generators"].size() == 1);
    CHECK(d["certificates"].empty());
    CHECK(d["covers"] == d["new_generators"]);
  }
  CHECK(j["degrees"][4]["new_generators"][0] == nlohmann::json::array({3, 1}));
}

TEST_CASE("generators subcommand certifies single facets") {
  const auto r = run({"generators", data("ex17.vca"), "--horizon", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("certified finitely generated, bound=2") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"generators", data("ex17.vca"), "--horizon", "4", "--json"}).out);
  CHECK(j["certified_bound"] == 2);
  CHECK(j["degrees"][1]["certificates"].size() == 3);
}

TEST_CASE("strict split mode reports the failing |I| split") {
  const auto r = run({"generators", data("split21.vca"), "--horizon", "5", "--strict-paper-split"});
  CHECK(r.code == cli::kExitVerificationFailed);
  CHECK(r.out.find("(2,1)@5           |I| rule: (1,1)@4 * (1,0)@1 FAIL  weighted rule: "
                   "(1,1)@3 * (1,0)@2 PASS") != std::string::npos);

  const auto j = nlohmann::json::parse(
      run({"generators", data("split21.vca"), "--horizon", "5", "--strict-paper-split", "--json"}).out);
  bool seen = false;
  for (const auto& c : j["split_checks"]) {
    if (c["exponents"] == nlohmann::json::array({2, 1}) && c["degree"] == 5) {
      seen = true;
      CHECK(c["index_count_rule"]["holds"] == false);
      CHECK(c["weighted_rule"]["holds"] == true);
      CHECK(c["weighted_rule"]["right"]["degree"] == 2);
    }
    CHECK(c["weighted_rule"]["holds"] == true);
  }
  CHECK(seen);

  // Without the flag no splits are attempted.
  CHECK(run({"generators", data("split21.vca"), "--horizon", "5"}).code == cli::kExitOk);
}

TEST_CASE("decompose subcommand") {
  const auto r = run({"decompose", data("mixed.vca")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("P = {1}  Z = {2}  F = {3}") != std::string::npos);
  CHECK(r.out.find("kind: Composite") != std::string::npos);
  CHECK(r.out.find("form: S + t*(A(G((2)),3)[x2] + (x3)S[t])") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"decompose", data("ex17.vca"), "--json"}).out);
  CHECK(j["kind"] == "Composite");
  CHECK(j["certified_bound"] == 2);

  CHECK(run({"decompose", data("ex11.vca")}).code == cli::kExitUsage);
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", data("mixed.vca"), "--horizon", "3", "--max-degree", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS split") != std::string::npos);
  CHECK(run({"verify", data("ex11.vca"), "--horizon", "3", "--max-degree", "4"}).code ==
        cli::kExitOk);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"covers", data("ex11.vca")}).code == cli::kExitUsage);
  CHECK(run({"covers", data("missing.vca"), "-k", "1"}).code == cli::kExitUsage);
  CHECK(run({"generators", data("ex11.vca"), "--horizon", "0"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"generators", data("split21.vca"), "--horizon", "6",
                                      "--strict-paper-split", "--json"};
  CHECK(run(args).out == run(args).out);
}
