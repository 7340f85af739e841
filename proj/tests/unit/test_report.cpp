#include <doctest.h>

#include <json.hpp>
#include <limits>

#include "rsi/report.hpp"

using namespace rsi;

TEST_SUITE("report") {

TEST_CASE("numbers and strings") {
  CHECK(json_number(0.5) == "0.5");
  CHECK(json_number(std::numeric_limits<double>::quiet_NaN()) == "null");
  CHECK(json_number(std::numeric_limits<double>::infinity()) == "null");
  CHECK(std::stod(json_number(0.1)) == 0.1);
  CHECK(json_string("a\"b\\c\n") == "\"a\\\"b\\\\c\\n\"");
}

TEST_CASE("rendered report parses") {
  IdentityCase item;
  item.id = IdentityId::WH;
  item.kase = ModelCase::Elliptic;
  item.masses = {1.0, -1.0};
  ResidualReport r;
  r.identity = item;
  r.samples = {{0x1234, 1e-12, 2.0}};
  r.max_rel_residual = 5e-13;
  r.passed = true;
  r.measured_constants = {{"spread", 1e-11}};
  ResidualReport s;
  s.identity = item;
  s.identity.id = IdentityId::Cor1;
  s.skipped = true;
  s.reason = "not applicable";

  ReportHeader h;
  h.seed = 99;
  auto text = render_json(h, {r, s});
  CHECK(text.back() == '\n');
  auto j = nlohmann::json::parse(text);
  CHECK(j["version"] == kReportVersion);
  CHECK(j["seed"] == 99);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["identity"] == "wh");
  CHECK(j["results"][0]["case"] == "elliptic");
  CHECK(j["results"][0]["passed"] == true);
  CHECK(j["results"][0]["runtime_ms"].is_null());
  CHECK(j["results"][0]["residuals"][0][1] == 1e-12);
  CHECK(j["results"][1]["skipped"] == true);
  CHECK(render_json(h, {r, s}) == text);

  CHECK(all_passed({r, s}));
  r.passed = false;
  CHECK_FALSE(all_passed({r, s}));
  auto lines = render_text({r, s});
  CHECK(lines.find("FAIL") != std::string::npos);
  CHECK(lines.find("SKIP") != std::string::npos);
}

}
