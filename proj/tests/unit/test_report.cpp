#include <gtest/gtest.h>

#include "glpq/cli/commands.hpp"
#include "glpq/report/report.hpp"
#include "glpq/report/spotcheck.hpp"

using namespace glpq;

namespace {

std::vector<CheckTask> toy_tasks() {
  return {
      {"ok", "always holds", [] { return std::optional<std::string>{}; }},
      {"bad", "never holds", [] { return std::optional<std::string>{"x - y"}; }},
      {"throws", "raises", []() -> std::optional<std::string> { throw NotAUnit("beta"); }},
  };
}

// One check whose deviation is |u - 1/2| scaled by `scale`; draws with
// u < 0.2 are rejected and draws with u > 0.9 are skipped as poles.
NumericFamily toy_family(double scale) {
  NumericFamily f;
  f.suite = "toy";
  f.checks = {{"toy[0]", "toy anchor"}};
  f.sample = [](std::mt19937_64& rng) {
    return Assignment{{"u", std::uniform_real_distribution<double>(0.0, 1.0)(rng)}};
  };
  f.guard = [](const Assignment& a) -> std::optional<std::string> {
    if (a.at("u") < 0.2) return "u too small";
    return std::nullopt;
  };
  f.evaluate = [scale](const Assignment& a) -> std::vector<std::optional<double>> {
    if (a.at("u") > 0.9) return {std::nullopt};
    return {scale * std::abs(a.at("u") - 0.5)};
  };
  return f;
}

}  // namespace

TEST(Report, FailuresAndExceptionsBecomeWitnesses) {
  const Report r = run_suite("toy", {{"n", 1}}, toy_tasks(), ExecMode::Serial);
  ASSERT_EQ(r.checks.size(), 3U);
  EXPECT_TRUE(r.checks[0].pass);
  EXPECT_FALSE(r.checks[1].pass);
  EXPECT_EQ(r.checks[1].witness, "x - y");
  EXPECT_FALSE(r.checks[2].pass);
  ASSERT_TRUE(r.checks[2].witness.has_value());
  EXPECT_NE(r.checks[2].witness->find("beta"), std::string::npos);
  EXPECT_EQ(r.failures(), 2U);
  EXPECT_FALSE(r.all_passed());
}

TEST(Report, ParallelRunKeepsOrderAndResults) {
  const auto serial = run_checks(toy_tasks(), ExecMode::Serial);
  const auto parallel = run_checks(toy_tasks(), ExecMode::Parallel);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].id, parallel[i].id);
    EXPECT_EQ(serial[i].pass, parallel[i].pass);
    EXPECT_EQ(serial[i].witness, parallel[i].witness);
  }
}

TEST(Report, JsonShape) {
  const auto j = to_json(run_suite("toy", {{"n", 1}}, toy_tasks(), ExecMode::Serial));
  EXPECT_EQ(j["suite"], "toy");
  EXPECT_EQ(j["params"]["n"], 1);
  ASSERT_TRUE(j["checks"].is_array());
  EXPECT_EQ(j["checks"][0]["id"], "ok");
  EXPECT_EQ(j["checks"][0]["anchor"], "always holds");
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_TRUE(j["checks"][0]["witness"].is_null());
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_EQ(j["checks"][1]["witness"], "x - y");
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
}

TEST(Report, TextSummaryLine) {
  const std::string text = to_text(run_suite("toy", {}, toy_tasks(), ExecMode::Serial));
  EXPECT_NE(text.find("PASS ok  [always holds]"), std::string::npos);
  EXPECT_NE(text.find("witness: x - y"), std::string::npos);
  EXPECT_NE(text.find("toy: 1/3 checks passed"), std::string::npos);
}

TEST(Spotcheck, RejectionsAndSkipsAreLogged) {
  SpotcheckOptions opt;
  opt.trials = 40;
  opt.seed = 5;
  opt.threshold = 1.0;
  const Report r = run_spotcheck(toy_family(1.0), opt);
  EXPECT_EQ(r.suite, "spotcheck:toy");
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.params["rejected_draws"].empty());
  EXPECT_NE(r.params["rejected_draws"][0].get<std::string>().find("u too small"), std::string::npos);
  EXPECT_FALSE(r.params["skipped"].empty());
  EXPECT_EQ(r.params["trials"], 40);
}

TEST(Spotcheck, ThresholdDecidesAndWitnessNamesThePoint) {
  SpotcheckOptions opt;
  opt.trials = 20;
  opt.seed = 5;
  const Report r = run_spotcheck(toy_family(1.0), opt);
  ASSERT_EQ(r.checks.size(), 1U);
  EXPECT_FALSE(r.checks[0].pass);
  ASSERT_TRUE(r.checks[0].witness.has_value());
  EXPECT_NE(r.checks[0].witness->find("max deviation"), std::string::npos);
  EXPECT_NE(r.checks[0].witness->find("u="), std::string::npos);
  EXPECT_TRUE(run_spotcheck(toy_family(0.0), opt).all_passed());
}

TEST(Spotcheck, SameSeedSameReport) {
  SpotcheckOptions opt;
  opt.trials = 4;
  opt.seed = 11;
  const auto a = to_json(run_named_spotcheck("section3", SuiteOptions{.section3_n_max = 2}, opt));
  const auto b = to_json(run_named_spotcheck("section3", SuiteOptions{.section3_n_max = 2}, opt));
  EXPECT_EQ(a["params"], b["params"]);
  EXPECT_EQ(a["checks"], b["checks"]);
  opt.seed = 12;
  const auto c = to_json(run_named_spotcheck("section3", SuiteOptions{.section3_n_max = 2}, opt));
  EXPECT_NE(a["params"]["max_deviation"], c["params"]["max_deviation"]);
}

TEST(Commands, NamesAndRays) {
  const auto names = suite_names();
  EXPECT_EQ(names, (std::vector<std::string>{"section2", "section3", "appendix", "series", "mside"}));
  EXPECT_THROW(run_named_suite("nope", {}), std::invalid_argument);
  const auto ray = parse_ray("1,-3");
  EXPECT_EQ(ray.first, 1);
  EXPECT_EQ(ray.second, -3);
  EXPECT_THROW(parse_ray("1"), std::invalid_argument);
  EXPECT_THROW(parse_ray("1/0,1"), std::invalid_argument);
  EXPECT_EQ(parse_ray("2/4,3").first, mpq_class(1, 2));
}
