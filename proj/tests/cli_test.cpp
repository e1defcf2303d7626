// End-to-end exit-code contract of the verify binary: 0 on a verified run,
// 1 on verification failure, 2 on usage errors.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(MORLEY_VERIFY_BIN) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/morley_cli_") + name;
}

}  // namespace

TEST_CASE("verified subset exits 0 and writes the report", "[cli]") {
  std::string out = temp_path("subset.json");
  std::remove(out.c_str());
  CHECK(run("--steps S04,S29 --format json -o " + out) == 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  nlohmann::json j = nlohmann::json::parse(f);
  CHECK(j.at("verdict") == "verified");
  CHECK(j.at("steps").size() == 2);
  CHECK(j.at("constants").at("S04").at("K") == "1/1");
  std::remove(out.c_str());
}

TEST_CASE("verification failure exits 1", "[cli]") {
  CHECK(run("--steps S08 --inject-fault") == 1);
}

TEST_CASE("usage errors exit 2", "[cli]") {
  CHECK(run("--degree 5") == 2);
  CHECK(run("--steps S99") == 2);
  CHECK(run("--no-such-flag") == 2);
  CHECK(run("--precision 16 --steps S01") == 2);
  CHECK(run("--format yaml --steps S01") == 2);
  CHECK(run("--scan --params 0.5,0.3,0.3,0.3,0.3,0.5") == 2);  // t6+t1 = 1
  CHECK(run("--scan --params 0.3,0.3") == 2);
  CHECK(run("-o /no/such/dir/report.json --steps S01") == 2);
}

TEST_CASE("help exits 0", "[cli]") {
  CHECK(run("--help") == 0);
}

TEST_CASE("scan writes csv", "[cli]") {
  std::string out = temp_path("scan.csv");
  std::remove(out.c_str());
  CHECK(run("--scan --grid 3 -o " + out) == 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "alpha,beta,GI,IJ,JG,defect");
  int rows = 0;
  std::string line;
  while (std::getline(f, line)) rows += !line.empty();
  CHECK(rows == 9);
  std::remove(out.c_str());
}

TEST_CASE("empty selection is vacuous", "[cli]") {
  std::string out = temp_path("vacuous.json");
  std::remove(out.c_str());
  CHECK(run("--steps '' --format json -o " + out) == 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  nlohmann::json j = nlohmann::json::parse(f);
  CHECK(j.at("verdict") == "verified");
  CHECK(j.at("steps").empty());
  CHECK(j.contains("warning"));
  std::remove(out.c_str());
}
