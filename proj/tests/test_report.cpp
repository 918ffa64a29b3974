#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dp4/ff_counter.hpp"
#include "dp4/poincare.hpp"
#include "dp4/report.hpp"
#include "dp4/suites.hpp"

using namespace dp4;

namespace {

Json strip_elapsed(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_elapsed(v);
  }
  return j;
}

RunConfig small_cfg() {
  RunConfig cfg;
  cfg.seed = 20260814;
  cfg.primes = {3, 7};
  cfg.random_samples = 24;
  cfg.suites = {"all"};
  cfg.jobs = 2;
  return cfg;
}

}  // namespace

TEST_CASE("report json shape and status accounting") {
  CHECK(std::string(status_name(CheckStatus::pass)) == "pass");
  CHECK(std::string(status_name(CheckStatus::fail)) == "fail");
  CHECK(std::string(status_name(CheckStatus::flagged)) == "flagged");

  Report rep;
  rep.config.seed = 7;
  rep.config.suites = {"lines"};
  ReportItem good{"x.alpha", "Example of lines in Y", CheckStatus::pass, 1, 1, 0.5, {}};
  ReportItem bad{"x.beta", "Example of lines in Y", CheckStatus::fail, 1, 2, 0.5, {}};
  rep.items = {good, bad};
  CHECK_FALSE(rep.ok());
  CHECK(rep.count(CheckStatus::pass) == 1);
  CHECK(rep.count(CheckStatus::fail) == 1);

  auto j = rep.to_json();
  CHECK(j["schema"] == "dp4-report/1");
  CHECK(j["config"]["seed"] == 7);
  CHECK(j["items"].size() == 2);
  CHECK(j["items"][0]["check_id"] == "x.alpha");
  CHECK(j["items"][0]["status"] == "pass");
  CHECK_FALSE(j["items"][0].contains("evidence"));
  CHECK(j["summary"]["fail"] == 1);

  rep.items.pop_back();
  CHECK(rep.ok());
}

TEST_CASE("anchor catalog") {
  CHECK(anchor_known("bcp_{01}^2+c^2p_{01}p_{02}"));
  CHECK(anchor_known("c^2p_{01}+cp_{04}-p_{14}"));
  CHECK(anchor_known("1+4t^{2}+10t^{4}+15t^{6}"));
  CHECK(anchor_known("tangent line of the dual conic"));
  CHECK_FALSE(anchor_known("an unlisted anchor"));
  CHECK(known_anchors().size() == 20);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.seed = 1;
  cfg.suites = {"lines"};

  cfg.primes = {3, 4};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg.primes = {2, 3};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg.primes = {3, 7};
  CHECK_NOTHROW(validate_config(cfg));

  cfg.suites = {"elimination"};
  cfg.primes = {2, 3};
  CHECK_NOTHROW(validate_config(cfg));

  cfg.suites = {"no-such-suite"};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(cfg), std::invalid_argument);

  cfg.suites = {"lines"};
  cfg.primes = {3};
  cfg.random_samples = 0;
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg.random_samples = 10;
  cfg.jobs = 0;
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);

  CHECK(all_suite_ids().size() == 8);
  CHECK(rank_dependent_suite("dbar"));
  CHECK_FALSE(rank_dependent_suite("elimination"));
}

TEST_CASE("full verification run passes and is reproducible") {
  auto cfg = small_cfg();
  Report r1 = run_verification(cfg);

  CHECK(r1.config.suites == all_suite_ids());
  CHECK(r1.items.size() == 30);
  std::set<std::string> ids;
  for (const auto& item : r1.items) {
    CAPTURE(item.check_id);
    CHECK(anchor_known(item.paper_anchor));
    CHECK(item.status == CheckStatus::pass);
    CHECK(item.elapsed_ms >= 0.0);
    CHECK(ids.insert(item.check_id).second);
  }
  CHECK(r1.items.front().check_id.starts_with("pluecker."));
  CHECK(r1.items.back().check_id.starts_with("poincare."));
  CHECK(r1.ok());

  Report r2 = run_verification(cfg);
  CHECK(strip_elapsed(r1.to_json()) == strip_elapsed(r2.to_json()));
}

TEST_CASE("suite selection keeps canonical order") {
  RunConfig cfg;
  cfg.seed = 5;
  cfg.primes = {3};
  cfg.random_samples = 8;
  cfg.suites = {"elimination", "pluecker"};
  Report rep = run_verification(cfg);
  CHECK(rep.config.suites == std::vector<std::string>{"pluecker", "elimination"});
  CHECK(rep.items.front().check_id.starts_with("pluecker."));
  CHECK(rep.ok());
}

TEST_CASE("chain mismatch is flagged with the full chain attached") {
  auto good = poincare_chain_item(expected_count_poly(VarietyId::DY), moduli_target_coeffs());
  CHECK(good.status == CheckStatus::pass);
  CHECK(good.evidence.is_null());

  auto flagged = poincare_chain_item({1, 3, 6, 3, 1}, moduli_target_coeffs());
  CHECK(flagged.status == CheckStatus::flagged);
  REQUIRE_FALSE(flagged.evidence.is_null());
  CHECK(flagged.evidence.contains("steps"));
  CHECK(flagged.evidence["steps"].size() == 7);
  CHECK(flagged.evidence["candidate_a"] == Json(std::vector<long long>{1, 3, 5, 3, 1}));
  CHECK(flagged.actual["referee_matched"] == false);

  auto bad_target = poincare_chain_item(expected_count_poly(VarietyId::DY),
                                        {1, 4, 10, 15, 15, 10, 4, 2});
  CHECK(bad_target.status == CheckStatus::flagged);
  CHECK(bad_target.actual["matches_target"] == false);
}
