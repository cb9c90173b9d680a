#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

// End-to-end checks against the installed binary; the path arrives through
// SPINLINE_CLI (set by the ctest registration). Without it the cases are
// skipped so the test binary still works standalone.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("SPINLINE_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

RunResult run_cli_stderr(const std::string& args) {
  const char* cli = std::getenv("SPINLINE_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " 2>&1 1>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool have_cli() { return std::getenv("SPINLINE_CLI") != nullptr; }

}  // namespace

TEST_CASE("lines emits the documented json schema") {
  if (!have_cli()) return;
  RunResult r = run_cli("lines --algebra u:0,2 --normalization paper --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["normalization"] == "paper");
  CHECK(doc["report"]["isolated_count"] == 2);
  CHECK(doc["report"]["family_count"] == 0);
  bool has_plus_i = false, has_minus_i = false;
  for (const auto& comp : doc["report"]["components"])
    for (const auto& chi : comp["character"]) {
      if (chi == "0/1+1/1i") has_plus_i = true;
      if (chi == "0/1-1/1i") has_minus_i = true;
    }
  CHECK(has_plus_i);
  CHECK(has_minus_i);
}

TEST_CASE("verify exit semantics: 0 on pass, 1 on any failing claim") {
  if (!have_cli()) return;
  CHECK(run_cli("verify --suite spinc").exit_code == 0);
  CHECK(run_cli("verify --suite riemannian --max-n 8").exit_code == 0);
  // the neutral suite carries the documented red claim
  CHECK(run_cli("verify --suite neutral").exit_code == 1);
}

TEST_CASE("verify json is deterministic and machine-readable") {
  if (!have_cli()) return;
  RunResult a = run_cli("verify --suite kahler --seed 3 --format json");
  RunResult b = run_cli("verify --suite kahler --seed 3 --format json");
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["suite"] == "kahler");
  CHECK(doc["seed"] == 3);
  CHECK(doc["overall"] == true);
}

TEST_CASE("diagnostics name the failing grammar production") {
  if (!have_cli()) return;
  RunResult r = run_cli_stderr("lines --algebra u:xy");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("algebra-spec <unitary-args>") != std::string::npos);

  RunResult sim = run_cli_stderr("lines --algebra sim:type=3,h=su:0,2,n=4");
  CHECK(sim.exit_code == 1);
  CHECK(sim.out.find("<sim-phi>") != std::string::npos);

  CHECK(run_cli_stderr("verify --suite bogus").exit_code == 1);
  CHECK(run_cli_stderr("kahler --signature 1,2").exit_code == 1);
}

TEST_CASE("rep export and the algebra exchange round trip through files") {
  if (!have_cli()) return;
  RunResult rep = run_cli("rep --signature 0,3 export");
  CHECK(rep.exit_code == 0);
  auto doc = nlohmann::json::parse(rep.out);
  CHECK(doc["signature"] == nlohmann::json::array({0, 3}));
  CHECK(doc["dim"] == 2);
  CHECK(doc["generators"].size() == 3);
  CHECK(doc.contains("metadata"));

  std::string path = "spinline_cli_test_export.json";
  CHECK(run_cli("export --algebra su:0,2 --out " + path).exit_code == 0);
  RunResult lines = run_cli("lines --algebra file:" + path + " --format json");
  CHECK(lines.exit_code == 0);
  auto report = nlohmann::json::parse(lines.out);
  CHECK(report["report"]["family_count"] == 1);
  std::remove(path.c_str());
}
