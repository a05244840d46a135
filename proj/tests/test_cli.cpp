#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dirforms/cli.hpp"

using namespace dirforms;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

long count_lines(const std::string& s) {
  long n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("construct emits the worked example coefficients") {
  RunResult r = run({"construct", "--d", "1", "--a", "2", "--b", "1", "--n",
                     "1", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["A"]["2"] == "48");
  CHECK(j["B"]["1"] == "315/4");
  CHECK(j["A_table"]["0"]["2"] == "36");
  CHECK(j["A_table"]["1"]["1"] == "-47/2");
  CHECK(j["D"] == "2");
  CHECK(j["checks"]["integrality"] == true);
}

TEST_CASE("table csv has the six d=2 rows") {
  RunResult r = run({"table", "--d", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.out) == 7);  // header + 6 rows
  CHECK(r.out.rfind("a,b,value,delta,matched_variant,", 0) == 0);
  CHECK(r.out.find("88,10,1.00176867,2,with-slack,true,false") !=
        std::string::npos);
  CHECK(r.out.find("159855,2894,3.00000194,4,with-slack,") !=
        std::string::npos);
}

TEST_CASE("identical invocations are byte identical") {
  std::vector<std::string> args = {"table", "--d", "3", "--format", "csv"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> args2 = {"saddle", "--d",      "1",  "--a",
                                    "9",      "--b",      "1",  "--precision",
                                    "30",     "--format", "json"};
  RunResult c = run(args2);
  RunResult d = run(args2);
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("verify passes on a reference grid") {
  RunResult r = run({"verify", "--d", "1", "--a", "9", "--b", "1", "--n-max",
                     "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("eval reports the worked value") {
  RunResult r = run({"eval", "--d", "1", "--a", "2", "--b", "1", "--n", "1",
                     "--precision", "30", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  std::string v = j["value"];
  CHECK(v.substr(0, 10) == "2.06835208");
  CHECK(v.find("e-01") != std::string::npos);
}

TEST_CASE("bound subcommand reproduces the first table row") {
  RunResult r = run({"bound", "--d", "1", "--a", "9", "--b", "1", "--variant",
                     "no-slack", "--mode", "numeric", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  std::string v = j["value"];
  CHECK(v.substr(0, 10) == "1.08700873");
  CHECK(j["delta"] == 2);
  CHECK(j["rigorous"] == true);
  CHECK(j["hypothesis"]["pass"] == true);
}

TEST_CASE("search text output reports a miss") {
  RunResult r = run({"search", "--d", "1", "--target-dim", "2", "--a-limit",
                     "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no admissible") != std::string::npos);
}

TEST_CASE("series file errors name the offending field and exit 2") {
  const char* path = "cli_bad_series.json";
  {
    std::ofstream f(path);
    f << "{\"d\": 2}";
  }
  RunResult r = run({"eval", "--d", "2", "--a", "5", "--b", "1", "--n", "1",
                     "--series", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("coeffs_re") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"bound", "--variant", "bogus"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "--precision", "5"}).code == 2);  // below the minimum
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"table", "--help"}).code == 0);
}

TEST_CASE("series period must match the form") {
  RunResult r = run({"eval", "--d", "2", "--a", "5", "--b", "1", "--n", "1",
                     "--series", "chi4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("period") != std::string::npos);
}

TEST_CASE("demo rows carry both reference curves") {
  RunResult r = run({"demo", "--d", "1", "--mu", "1.5", "--t", "20", "--t",
                     "100", "--format", "json", "--precision", "20"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["a"] == 89);
  CHECK(j["rows"][0]["rigorous"] == false);
  CHECK(j["rows"][1]["a"] == 1000);
  CHECK(j["rows"][1]["rigorous"] == true);
}
