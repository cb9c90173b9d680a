#include <doctest.h>

#include "spinline/verify.hpp"

using namespace spinline;

TEST_CASE("suite names validate") {
  SuiteSpec spec;
  spec.name = "frobnicate";
  CHECK_THROWS_AS(run_suite(spec), std::invalid_argument);
  spec.name = "clifford";
  spec.max_n = 0;
  CHECK_THROWS_AS(run_suite(spec), std::invalid_argument);
  spec.max_n = 17;
  CHECK_THROWS_AS(run_suite(spec), std::invalid_argument);
}

TEST_CASE("small suites pass and carry statements") {
  for (const char* name : {"riemannian", "kahler", "spinc"}) {
    SuiteSpec spec;
    spec.name = name;
    spec.max_n = 8;
    Report r = run_suite(spec);
    CHECK(r.overall);
    for (const auto& c : r.claims) {
      CHECK_FALSE(c.statement.empty());
      CHECK_FALSE(c.id.empty());
    }
  }
}

TEST_CASE("reports are byte-identical for equal spec and seed") {
  SuiteSpec spec;
  spec.name = "lorentzian";
  spec.seed = 12345;
  std::string a = report_json(run_suite(spec));
  std::string b = report_json(run_suite(spec));
  CHECK(a == b);
  std::string at = report_text(run_suite(spec));
  std::string bt = report_text(run_suite(spec));
  CHECK(at == bt);
}

TEST_CASE("overall is the conjunction of claim passes") {
  SuiteSpec spec;
  spec.name = "neutral";  // contains the documented failing claim
  Report r = run_suite(spec);
  bool conj = true;
  int fails = 0;
  for (const auto& c : r.claims) {
    conj = conj && c.pass;
    if (!c.pass) ++fails;
  }
  CHECK(r.overall == conj);
  CHECK(fails == 1);  // exactly the B-independence contract
  for (const auto& c : r.claims)
    if (!c.pass) CHECK(c.id == "neutral.formula_affine_B_independent");
}

TEST_CASE("json report excludes timing and records the spec") {
  SuiteSpec spec;
  spec.name = "spinc";
  spec.seed = 9;
  Report r = run_suite(spec);
  std::string json = report_json(r);
  CHECK(json.find("elapsed") == std::string::npos);
  CHECK(json.find("\"seed\": 9") != std::string::npos);
  CHECK(json.find("\"normalization\": \"half\"") != std::string::npos);
}
