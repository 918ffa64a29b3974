#include "dp4/report.hpp"

#include <algorithm>

namespace dp4 {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "fail";
}

Json ReportItem::to_json() const {
  Json j;
  j["check_id"] = check_id;
  j["paper_anchor"] = paper_anchor;
  j["status"] = status_name(status);
  j["expected"] = expected;
  j["actual"] = actual;
  j["elapsed_ms"] = elapsed_ms;
  if (!evidence.is_null()) j["evidence"] = evidence;
  return j;
}

int Report::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(items.begin(), items.end(),
                                        [s](const ReportItem& it) { return it.status == s; }));
}

Json Report::to_json() const {
  Json j;
  j["schema"] = "dp4-report/1";
  Json cfg;
  cfg["seed"] = config.seed;
  cfg["primes"] = config.primes;
  cfg["random_samples"] = config.random_samples;
  cfg["suites"] = config.suites;
  cfg["jobs"] = config.jobs;
  j["config"] = cfg;
  Json arr = Json::array();
  for (const auto& it : items) arr.push_back(it.to_json());
  j["items"] = arr;
  Json summary;
  summary["pass"] = count(CheckStatus::pass);
  summary["fail"] = count(CheckStatus::fail);
  summary["flagged"] = count(CheckStatus::flagged);
  j["summary"] = summary;
  return j;
}

const std::vector<std::string>& known_anchors() {
  static const std::vector<std::string> anchors = {
      "O_L(1) ⊕ O_L^{⊕2} or O_L(-1) ⊕ O_L(1)^{⊕2}",
      "smooth blow-up along the smooth conic",
      "a_0a_4+a_1^2=a_2=a_3=0",
      "P_t=\\mathbb{P}(V_1\\wedge V_4)",
      "tangent line of the dual conic",
      "there are five types of lines",
      "Example of lines in Y",
      "a blow-down followed by a blow-up",
      "(U_3, V_4) \\mid U_3\\subset \\mathcal{K}",
      "defined by x_1^2+4x_0x_2=0",
      "x_1^2+4x_0x_2=0",
      "bcp_{01}^2+c^2p_{01}p_{02}",
      "c^2p_{01}+cp_{04}-p_{14}",
      "P^1-fiberation over Q_3",
      "P^1-fiberation over the vertex conic",
      "at a point uniquely",
      "(P(P^2)-1) · P(D(Y))",
      "1+4t^{2}+10t^{4}+15t^{6}",
      "the lines of the case (d) are only non-free",
      "disjoint union P^1 ⊔ P^1",
  };
  return anchors;
}

bool anchor_known(const std::string& anchor) {
  const auto& a = known_anchors();
  return std::find(a.begin(), a.end(), anchor) != a.end();
}

}  // namespace dp4
