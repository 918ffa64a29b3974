#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace dp4 {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, flagged };
const char* status_name(CheckStatus s);

// One verification record. paper_anchor must come from known_anchors();
// evidence is attached when status is flagged.
struct ReportItem {
  std::string check_id;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::fail;
  Json expected;
  Json actual;
  double elapsed_ms = 0.0;
  Json evidence;

  Json to_json() const;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<int> primes = {3, 5, 7, 11};
  int random_samples = 100;
  std::vector<std::string> suites;  // empty or {"all"} selects every suite
  int jobs = 1;
};

struct Report {
  RunConfig config;
  std::vector<ReportItem> items;

  int count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
  Json to_json() const;  // schema, config echo, items, summary
};

// Catalog of accepted paper_anchor values.
const std::vector<std::string>& known_anchors();
bool anchor_known(const std::string& anchor);

}  // namespace dp4
