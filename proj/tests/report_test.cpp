#include <catch2/catch_amalgamated.hpp>

#include "morley/report.hpp"

using namespace morley;

TEST_CASE("json report round-trips", "[report]") {
  RunConfig cfg;
  cfg.steps_given = true;
  cfg.steps = {"S01", "S04"};
  cfg.format = "json";
  Report rep = Report::build(cfg, run_pipeline(PipelineConfig{}, cfg.steps));
  nlohmann::json j = rep.to_json();
  Report back = Report::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("verdict") == "verified");
  CHECK(j.at("steps").size() == 2);
}

TEST_CASE("constants render as exact fractions", "[report]") {
  RunConfig cfg;
  cfg.steps_given = true;
  cfg.steps = {"S04", "S11"};
  Report rep = Report::build(cfg, run_pipeline(PipelineConfig{}, cfg.steps));
  nlohmann::json j = rep.to_json();
  CHECK(j.at("constants").at("S04").at("K") == "1/1");
  CHECK(j.at("constants").at("S11").at("K") == "-4/3");
}

TEST_CASE("failed steps carry canonical witnesses", "[report]") {
  RunConfig cfg;
  cfg.steps_given = true;
  cfg.steps = {"S08"};
  cfg.inject_fault = true;
  PipelineConfig pcfg;
  pcfg.corrupt_system = true;
  Report rep = Report::build(cfg, run_pipeline(pcfg, cfg.steps));
  CHECK(rep.verdict == "failed");
  nlohmann::json j = rep.to_json();
  CHECK(j.at("steps").at(0).at("status") == "failed");
  std::string witness = j.at("steps").at(0).at("witness").get<std::string>();
  CHECK(witness.find("difference") != std::string::npos);
  Report back = Report::from_json(j);
  CHECK(back.to_json() == j);
}

TEST_CASE("empty selection is vacuously verified with a warning", "[report]") {
  RunConfig cfg;
  cfg.steps_given = true;
  Report rep = Report::build(cfg, {});
  CHECK(rep.verdict == "verified");
  CHECK(!rep.warning.empty());
  nlohmann::json j = rep.to_json();
  CHECK(j.contains("warning"));
  CHECK(Report::from_json(j).warning == rep.warning);
}

TEST_CASE("text rendering", "[report]") {
  RunConfig cfg;
  cfg.steps_given = true;
  cfg.steps = {"S01"};
  Report rep = Report::build(cfg, run_pipeline(PipelineConfig{}, cfg.steps));
  std::string text = render_report(rep, "text");
  CHECK(text.find("S01") != std::string::npos);
  CHECK(text.find("verdict: verified") != std::string::npos);
}

TEST_CASE("config validation", "[report]") {
  RunConfig cfg;
  CHECK(!cfg.validate().has_value());

  RunConfig low = cfg;
  low.degree = 5;
  REQUIRE(low.validate().has_value());
  CHECK(low.validate()->find("degree") != std::string::npos);

  RunConfig coarse = cfg;
  coarse.precision_bits = 32;
  CHECK(coarse.validate().has_value());

  RunConfig badstep = cfg;
  badstep.steps_given = true;
  badstep.steps = {"S77"};
  CHECK(badstep.validate().has_value());

  RunConfig badfmt = cfg;
  badfmt.format = "yaml";
  CHECK(badfmt.validate().has_value());

  RunConfig badscan = cfg;
  badscan.scan = true;
  badscan.params[0] = Rational(1, 2);
  badscan.params[5] = Rational(1, 2);  // t6 + t1 = 1 violates admissibility
  CHECK(badscan.validate().has_value());

  RunConfig scan_low_degree = cfg;
  scan_low_degree.scan = true;
  scan_low_degree.degree = 2;  // irrelevant in scan mode
  CHECK(!scan_low_degree.validate().has_value());
}
