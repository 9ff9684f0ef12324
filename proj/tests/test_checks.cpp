#include "doctest.h"
#include "hw/checks.hpp"
#include "json.hpp"

using namespace hw;

TEST_CASE("registry shape") {
  CHECK(check_registry().size() == 15);
  auto ids = check_ids();
  CHECK(std::find(ids.begin(), ids.end(), "lemma-2.1-chain") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "oracle-agreement") != ids.end());
}

TEST_CASE("single-check run and unknown selectors") {
  VerifyConfig config;
  Report rep = run_checks("lemma-4.1-words", config);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].status == "pass");
  CHECK(rep.all_passed());
  CHECK_THROWS_AS(run_checks("no-such-check", config), Error);
}

TEST_CASE("empty selector gives an empty valid report") {
  VerifyConfig config;
  Report rep = run_checks("", config);
  CHECK(rep.checks.empty());
  CHECK(rep.all_passed());
  auto parsed = nlohmann::json::parse(report_json(rep));
  CHECK(parsed["checks"].is_array());
  CHECK(parsed["checks"].empty());
  CHECK(parsed["meta"]["field"] == "f2-rational");
}

TEST_CASE("bad u is rejected up front") {
  VerifyConfig config;
  config.u_expr = "1";
  CHECK_THROWS_AS(run_checks("m0-sl2", config), Error);
  config.u_expr = "0";
  CHECK_THROWS_AS(run_checks("m0-sl2", config), Error);
}

TEST_CASE("json round trip and determinism") {
  VerifyConfig config;
  Report rep1 = run_checks("zeta-kills-zbar", config);
  Report rep2 = run_checks("zeta-kills-zbar", config);
  std::string j1 = report_json(rep1);
  std::string j2 = report_json(rep2);
  CHECK(j1 == j2);  // byte-identical without --timings
  auto parsed = nlohmann::json::parse(j1);
  CHECK(parsed["meta"]["u"] == "u");
  CHECK(parsed["meta"]["version"] == "0.1.0");
  REQUIRE(parsed["checks"].size() == 1);
  CHECK(parsed["checks"][0]["id"] == "zeta-kills-zbar");
  CHECK(parsed["checks"][0]["status"] == "pass");
  CHECK(parsed["checks"][0]["ms"] == 0);
  CHECK(nlohmann::json::parse(report_json(rep1)) == parsed);
}

TEST_CASE("expected-negative distinctness over GF(4)") {
  VerifyConfig config;
  config.field = Field::gf2n(2, 0b111);
  config.u_expr = "w";
  Report rep = run_checks("distinctness", config);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].status == "pass");
  CHECK(rep.checks[0].witness.find("square") != std::string::npos);
}

TEST_CASE("timings flag embeds measured milliseconds") {
  VerifyConfig config;
  config.timings = true;
  Report rep = run_checks("milnor-square", config);
  auto parsed = nlohmann::json::parse(report_json(rep));
  CHECK(parsed["checks"][0]["ms"] == rep.checks[0].ms);
  config.timings = false;
  CHECK(nlohmann::json::parse(report_json(run_checks("milnor-square", config)))["checks"][0]
            ["ms"] == 0);
}

TEST_CASE("a full run emits 15 entries") {
  VerifyConfig config;
  config.field = Field::gf2n(2, 0b111);
  config.u_expr = "w";
  Report rep = run_checks("all", config);
  CHECK(rep.checks.size() == 15);
  CHECK(rep.all_passed());
}

TEST_CASE("text report shape") {
  VerifyConfig config;
  Report rep = run_checks("m0-sl2", config);
  std::string text = report_text(rep);
  CHECK(text.find("m0-sl2") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);
  CHECK(text.find("all checks passed") != std::string::npos);
}
