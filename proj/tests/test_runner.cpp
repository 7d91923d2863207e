#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwf/parallel.hpp"
#include "cwf/report.hpp"
#include "cwf/runner.hpp"
#include "doctest.h"
#include "json.hpp"

using cwf::ScenarioConfig;
using cwf::VerificationReport;

namespace {

const cwf::CheckRecord* find_check(const VerificationReport& r,
                                   const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

const cwf::ConvergenceRecord* find_sweep(const VerificationReport& r,
                                         const std::string& id) {
  for (const auto& c : r.convergence)
    if (c.id == id) return &c;
  return nullptr;
}

ScenarioConfig small_t2_config() {
  ScenarioConfig c = cwf::default_config("atiyah_bott_t2");
  c.grid_sizes = {16};
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("runner");

TEST_CASE("the registry lists five scenarios with runnable defaults") {
  const std::vector<std::string> names = cwf::scenario_names();
  REQUIRE(names.size() == 5);
  const std::set<std::string> got(names.begin(), names.end());
  for (const char* want : {"monopole", "atiyah_bott_t2", "symplectic_t4",
                           "cs_t3", "transgression_t4"})
    CHECK(got.count(want) == 1);

  for (const std::string& name : names) {
    const ScenarioConfig c = cwf::default_config(name);
    CHECK(c.scenario == name);
    CHECK(c.seed == 42);
    CHECK(c.grid_sizes.size() >= 3);
  }
  CHECK(cwf::default_config("monopole").group == "u1");
  CHECK(cwf::default_config("monopole").polynomial == "c1_u1");
  CHECK(cwf::default_config("cs_t3").polynomial == "c2_su2");
  CHECK_THROWS_AS(cwf::default_config("nope"), std::runtime_error);
}

TEST_CASE("config parsing applies defaults, overrides, and rejections") {
  const ScenarioConfig c = cwf::parse_config(R"({
    "scenario": "cs_t3",
    "seed": 7,
    "grid_sizes": [12, 16],
    "mode": "fd4",
    "amp": 0.5,
    "tolerances": {"cs_shift": 0.25},
    "min_orders": {"winding": 2.5}
  })");
  CHECK(c.scenario == "cs_t3");
  CHECK(c.seed == 7);
  CHECK(c.grid_sizes == std::vector<int>{12, 16});
  CHECK(c.mode == cwf::DiffMode::fd4);
  CHECK(c.amp == 0.5);
  CHECK(c.group == "su2");
  CHECK(c.polynomial == "c2_su2");
  CHECK(c.tolerances.at("cs_shift") == 0.25);
  CHECK(c.min_orders.at("winding") == 2.5);

  auto rejects = [](const char* text) {
    CHECK_THROWS_AS(cwf::parse_config(text), std::runtime_error);
  };
  rejects("not json at all");
  rejects(R"({"seed": 1})");
  rejects(R"({"scenario": "cs_t3"})");
  rejects(R"({"scenario": "warp_drive", "seed": 1})");
  rejects(R"({"scenario": "cs_t3", "seed": -4})");
  rejects(R"({"scenario": "cs_t3", "seed": 1, "what": 2})");
  rejects(R"({"scenario": "cs_t3", "seed": 1, "mode": "exact"})");
  rejects(R"({"scenario": "cs_t3", "seed": 1, "grid_sizes": []})");
  rejects(R"({"scenario": "cs_t3", "seed": 1, "grid_sizes": [4, 8]})");
  rejects(R"({"scenario": "cs_t3", "seed": 1, "grid_sizes": [16, 12]})");
  rejects(R"({"scenario": "cs_t3", "seed": 1, "tolerances": {"x": -1.0}})");
  rejects(R"({"scenario": "cs_t3", "seed": 1, "polynomial": "c1_u1"})");
  rejects(R"({"scenario": "monopole", "seed": 1, "group": "su2"})");
  rejects(R"({"scenario": "symplectic_t4", "seed": 1, "beta_pairs": 3})");

  // a zero tolerance is legal: it turns the check into a strict-zero gate
  const ScenarioConfig z = cwf::parse_config(
      R"({"scenario": "monopole", "seed": 1,
          "tolerances": {"monopole_chern": 0.0}})");
  CHECK(z.tolerances.at("monopole_chern") == 0.0);
}

TEST_CASE("the schema document names every config key") {
  const std::string s = cwf::config_schema();
  for (const char* key :
       {"scenario", "grid_sizes", "mode", "group", "polynomial", "beta_pairs",
        "fmax", "amp", "seed", "tolerances", "min_orders"})
    CHECK(s.find(key) != std::string::npos);
}

TEST_CASE("reports render with stable field order in both formats") {
  VerificationReport r;
  r.version = "0.1.0";
  r.scenario = "demo";
  r.kind = "suite";
  r.seed = 7;
  r.grid_sizes = {5, 6};
  r.mode = "spectral";
  r.group = "su2";
  r.polynomial = "c2_su2";
  r.checks.push_back({"alpha", 0.125, 0.25, 0.125, 0.5, true, ""});
  r.checks.push_back({"beta", 0.0, 0.0, 0.0, 0.0, false, "solver failure"});
  r.convergence.push_back(
      {"gamma", {8, 16, 32}, {0.5, 0.25, 0.125}, false, 1.0, 0.5, true, ""});
  r.convergence.push_back(
      {"delta", {8, 16, 32}, {0.0, 0.0, 0.0}, true, 0.0, 3.5, true, ""});
  CHECK_FALSE(r.overall_pass());

  const std::string js = cwf::report_json(r);
  CHECK(cwf::report_json(r) == js);

  const nlohmann::json j = nlohmann::json::parse(js);
  CHECK(j.at("version") == "0.1.0");
  CHECK(j.at("scenario") == "demo");
  CHECK(j.at("kind") == "suite");
  CHECK(j.at("seed") == 7);
  CHECK_FALSE(j.contains("threads"));
  REQUIRE(j.at("checks").size() == 2);
  CHECK(j.at("checks")[0].at("id") == "alpha");
  CHECK(j.at("checks")[0].at("residual") == 0.125);
  CHECK(j.at("checks")[0].at("pass") == true);
  CHECK(j.at("checks")[1].at("error") == "solver failure");
  CHECK_FALSE(j.at("checks")[1].contains("value"));
  CHECK(j.at("checks")[1].at("pass") == false);
  REQUIRE(j.at("convergence").size() == 2);
  CHECK(j.at("convergence")[0].at("order") == 1.0);
  CHECK(j.at("convergence")[0].at("min_order") == 0.5);
  CHECK(j.at("convergence")[1].at("order") == "exact");
  CHECK(j.at("overall_pass") == false);
  CHECK(js.find("\"version\"") < js.find("\"scenario\""));
  CHECK(js.find("\"scenario\"") < js.find("\"checks\""));
  CHECK(js.find("\"checks\"") < js.find("\"convergence\""));

  const std::string sum = cwf::report_summary(r);
  CHECK(sum.find("cwf suite report 0.1.0") != std::string::npos);
  CHECK(sum.find("scenario demo") != std::string::npos);
  CHECK(sum.find("alpha") != std::string::npos);
  CHECK(sum.find("error: solver failure") != std::string::npos);
  CHECK(sum.find("exact") != std::string::npos);
  CHECK(sum.find("overall FAIL") != std::string::npos);
}

TEST_CASE("the monopole suite passes its default config") {
  const VerificationReport rep = cwf::run_suite(cwf::default_config("monopole"));
  CHECK(rep.kind == "suite");
  CHECK(rep.seed == 42);
  CHECK(rep.overall_pass());
  for (const char* id :
       {"monopole_chern", "monopole_overlap", "monopole_additivity"}) {
    const auto* c = find_check(rep, id);
    REQUIRE(c != nullptr);
    CHECK(c->pass);
    CHECK(c->error.empty());
  }
}

TEST_CASE("the monopole sweep fits quadrature convergence") {
  const VerificationReport rep =
      cwf::convergence_sweep(cwf::default_config("monopole"));
  CHECK(rep.kind == "sweep");
  CHECK(rep.overall_pass());
  const auto* rec = find_sweep(rep, "chern_quadrature");
  REQUIRE(rec != nullptr);
  CHECK(rec->resolutions == std::vector<int>{16, 32, 64});
  REQUIRE(rec->residuals.size() == 3);
  CHECK(rec->pass);

  ScenarioConfig c = cwf::default_config("monopole");
  c.grid_sizes = {16, 32};
  CHECK_THROWS_AS(cwf::convergence_sweep(c), std::runtime_error);
}

TEST_CASE("a zero tolerance override inverts a passing check") {
  ScenarioConfig c = small_t2_config();
  const VerificationReport rep = cwf::run_suite(c);
  CHECK(rep.overall_pass());
  const auto* ok = find_check(rep, "moment_identity");
  REQUIRE(ok != nullptr);
  CHECK(ok->pass);
  CHECK(ok->residual > 0.0);

  c.tolerances["moment_identity"] = 0.0;
  const VerificationReport inverted = cwf::run_suite(c);
  CHECK_FALSE(inverted.overall_pass());
  const auto* bad = find_check(inverted, "moment_identity");
  REQUIRE(bad != nullptr);
  CHECK_FALSE(bad->pass);
  CHECK(bad->tolerance == 0.0);
}

TEST_CASE("suite reports are byte-identical across thread counts") {
  const int before = cwf::par::thread_count();
  const ScenarioConfig c = small_t2_config();
  cwf::par::set_thread_count(1);
  const std::string one = cwf::report_json(cwf::run_suite(c));
  cwf::par::set_thread_count(4);
  const std::string four = cwf::report_json(cwf::run_suite(c));
  cwf::par::set_thread_count(before);
  REQUIRE(one == four);
  CHECK(one.find("\"overall_pass\": true") != std::string::npos);
}

TEST_SUITE_END();
