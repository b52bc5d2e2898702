#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bolpq/table_io.hpp"

using namespace bolpq;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, bool mute_stderr = false) {
  std::string cmd = std::string(BOLPQ_CLI_PATH) + " " + args;
  cmd += mute_stderr ? " 2>/dev/null" : " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("construct: json output round-trips and is a Bruck table") {
  CliResult r = run_cli("construct --p 7 --q 3 --gamma 4 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["case"] == "q_divides_p_minus_1");
  CHECK(doc["t"] == 3);
  CHECK(doc["omega"] == json::array({2, 0}));
  CHECK(doc["u"] == json::array({1, 3, 3}));
  LoopTable t = table_from_json(doc);
  CHECK(t.n == 21);
  CHECK(is_right_bol(t));
  CHECK(has_aip(t));
}

TEST_CASE("construct: gap output parses and passes the checkers") {
  CliResult r = run_cli("construct --p 7 --q 3 --gamma 4 --format gap");
  REQUIRE(r.exit_code == 0);
  LoopTable t = table_from_gap(r.out);
  CHECK(t.n == 21);
  CHECK(is_right_bol(t));
  CHECK(has_aip(t));
}

TEST_CASE("construct: gamma-m form") {
  CliResult r = run_cli("construct --p 5 --q 3 --gamma-m 0 --format json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["n"] == 15);
  CHECK(doc["theta"] == json::array({1, 3, 3}));
}

TEST_CASE("construct: file output round-trips byte-identically") {
  std::string base = "/tmp/bolpq_cli_test_table";
  for (std::string fmt : {"json", "csv", "gap"}) {
    std::string path = base + "." + fmt;
    CliResult r = run_cli("construct --p 5 --q 3 --gamma-m 2 --format " + fmt + " --out " + path);
    REQUIRE(r.exit_code == 0);
    std::string text = slurp(path);
    LoopTable expected;
    {
      FieldCtx ctx = make_context(5, 3);
      expected = build_bol_loop(ctx, theta_from_gamma(ctx, {3, 2}));
    }
    if (fmt == "json") {
      CHECK(table_from_json(json::parse(text)) == expected);
    } else if (fmt == "csv") {
      CHECK(table_from_csv(text).same_table(expected));
    } else {
      CHECK(table_from_gap(text).same_table(expected));
    }
    std::remove(path.c_str());
  }
}

TEST_CASE("exit code contract") {
  // 2: no-divide
  CHECK(run_cli("construct --p 11 --q 7 --gamma 1", true).exit_code == 2);
  // but the cyclic group is still constructible there
  CHECK(run_cli("construct --p 11 --q 7 --cyclic", true).exit_code == 0);
  // 3: bad gamma (in <omega>-marked set), wrong form, out-of-range index
  CHECK(run_cli("construct --p 7 --q 3 --gamma 2", true).exit_code == 3);
  CHECK(run_cli("construct --p 7 --q 3 --gamma-m 1", true).exit_code == 3);
  CHECK(run_cli("construct --p 5 --q 3 --gamma 1", true).exit_code == 3);
  CHECK(run_cli("construct --p 5 --q 3 --gamma-m 1", true).exit_code == 3);
  CHECK(run_cli("construct --p 7 --q 3 --gamma-index 99", true).exit_code == 3);
  // 5: oracle guard
  CHECK(run_cli("oracle --p 11 --q 3", true).exit_code == 5);
  // 1: invalid primes
  CHECK(run_cli("classify --p 9 --q 3", true).exit_code == 1);
}

TEST_CASE("classify output") {
  CliResult r = run_cli("classify --p 7 --q 3");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["iso_count"] == 4);

  CliResult iso = run_cli("classify --p 13 --q 3 --isotopy");
  json doc2 = json::parse(iso.out);
  CHECK(doc2["iso_count"] == 7);
  CHECK(doc2["isotopy_count"] == 4);

  CliResult audit = run_cli("classify --p 11 --q 5 --audit");
  REQUIRE(audit.exit_code == 0);
  json doc3 = json::parse(audit.out);
  CHECK(doc3["iso_count"] == 5);
  CHECK(doc3["audit"]["passed"] == true);
  // audit attaches the group reports
  for (const json& e : doc3["entries"]) {
    REQUIRE(e.contains("rmlt"));
    CHECK(e["rmlt"]["order"] == e["rmlt_order"]);
    CHECK(e["rmlt"]["sylow"]["normal"] == true);
    CHECK(e["rmlt"]["order"].get<uint64_t>() ==
          e["rmlt"]["rinn_order"].get<uint64_t>() * 55);
    if (e["bruck"] == true) {
      CHECK(e["rmlt"]["j_extension"]["fixed_eq_rinn"] == true);
      CHECK(e["rmlt"]["j_extension"]["antifixed_eq_section"] == true);
    }
  }

  CliResult nd = run_cli("classify --p 11 --q 7");
  REQUIRE(nd.exit_code == 0);
  CHECK(json::parse(nd.out)["iso_count"] == 1);
}

TEST_CASE("classify output is deterministic") {
  CliResult a = run_cli("classify --p 11 --q 3 --isotopy");
  CliResult b = run_cli("classify --p 11 --q 3 --isotopy");
  CHECK(a.out == b.out);
}

TEST_CASE("oracle command") {
  CliResult r = run_cli("oracle --p 5 --q 3");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["classes"] == 3);
  CHECK(doc["counts"]["constructive_classes"] == 3);
  CHECK(doc["linear_only"] == true);
  CHECK(doc["matched"] == true);
}

TEST_CASE("conjecture sweep output") {
  CliResult r = run_cli("conjecture3p --pmax 30");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  // 5, 7, 11, 13, 17, 19, 23, 29
  CHECK(r.out.find("# 8 primes checked, 0 mismatches") != std::string::npos);
}
