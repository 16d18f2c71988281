#include <gtest/gtest.h>

#include "json.hpp"
#include "skewlab/report/report.hpp"
#include "skewlab/suites/suites.hpp"

using namespace skewlab;

TEST(Emit, EmptyReport) {
  const std::string s = emit(Report{}, Format::json);
  const auto j = nlohmann::ordered_json::parse(s);
  EXPECT_EQ(j.begin().key(), "version");
  EXPECT_EQ(j["version"], kToolVersion);
  EXPECT_TRUE(j["checks"].is_array());
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(Report{}.exit_code(), 0);
}

TEST(Emit, PassAndFail) {
  Report r;
  r.add(make_check("one", "plumbing", "case", true));
  auto j = nlohmann::json::parse(emit(r, Format::json));
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_EQ(r.exit_code(), 0);
  r.add(make_check("two", "plumbing", "case", false, "counterexample"));
  EXPECT_NE(r.exit_code(), 0);
  j = nlohmann::json::parse(emit(r, Format::json));
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_EQ(j["failures"], 1);
  r.checks.push_back({"three", "GKl", "case", Status::out_of_scope, "cited"});
  EXPECT_EQ(r.exit_code(), 1);
  const std::string text = emit(r, Format::text);
  EXPECT_NE(text.find("out-of-scope  three"), std::string::npos) << text;
  EXPECT_NE(text.find("3 checks, 1 failed"), std::string::npos) << text;
}

TEST(Emit, EveryCheckCarriesAReference) {
  SuiteConfig cfg;
  cfg.characteristic = 3;
  cfg.alpha = "param";
  cfg.samples = 2;
  const Report r = run_suite("all", cfg);
  EXPECT_EQ(r.exit_code(), 0);
  for (const auto& c : r.checks) EXPECT_FALSE(c.paper_ref.empty()) << c.name;
}

TEST(RunSuite, DeterministicForFixedSeed) {
  SuiteConfig cfg;
  cfg.samples = 3;
  cfg.seed = 7;
  EXPECT_EQ(emit(run_suite("morphisms", cfg), Format::json), emit(run_suite("morphisms", cfg), Format::json));
}

TEST(RunSuite, BadLiteralThrows) {
  SuiteConfig cfg;
  cfg.alpha = "rat:1/0";
  EXPECT_THROW(run_suite("presentations", cfg), std::invalid_argument);
}
