#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinline/holonomy.hpp"

namespace spinline {

// A suite run is a pure function of (name, normalization, max_n, seed):
// serialized reports are byte-identical across runs with the same spec.
struct SuiteSpec {
  std::string name = "all";
  Normalization norm = Normalization::half;
  int max_n = 10;  // hard cap 16 (dimension 2^8 endomorphisms)
  std::uint64_t seed = 0;
};

struct Claim {
  std::string id;
  std::string statement;
  bool pass = false;
  nlohmann::ordered_json witness;
};

struct Report {
  std::string suite;
  Normalization norm = Normalization::half;
  int max_n = 10;
  std::uint64_t seed = 0;
  std::vector<Claim> claims;
  bool overall = true;
  double elapsed_ms = 0;  // informational; never serialized (byte-stable output)
};

const std::vector<std::string>& suite_names();
Report run_suite(const SuiteSpec& spec);

std::string report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace spinline
