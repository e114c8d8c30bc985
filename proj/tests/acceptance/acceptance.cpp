// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "glpq/cli/commands.hpp"
#include "glpq/mside/suites.hpp"
#include "property_runs.hpp"

using namespace glpq;

namespace {

// Pinned limits.
constexpr double kSection2Seconds = 10.0;
constexpr double kSection3Seconds = 30.0;
constexpr double kAppendixSeconds = 30.0;
constexpr double kSeriesSecondsPerRay = 60.0;
constexpr double kMSideSeconds = 60.0;
constexpr double kPropertySeconds = 60.0;
constexpr int kPropertyInstances = 500;
constexpr int kSpotTrials = 20;
constexpr double kSpotThreshold = 1e-9;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome timed_suite(const std::function<Report()>& run, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = run();
  const double s = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu checks, %.2f s (limit %.0f s)", r.checks.size() - r.failures(),
                r.checks.size(), s, limit);
  return {r.all_passed() && !r.checks.empty() && s < limit, buf};
}

Outcome series_per_ray() {
  const SeriesParams defaults;
  bool ok = true;
  std::string detail;
  for (const auto& ray : defaults.rays) {
    SeriesParams one = defaults;
    one.rays = {ray};
    const Outcome o = timed_suite([&] { return verify_series(one); }, kSeriesSecondsPerRay);
    ok = ok && o.pass;
    detail += "(" + ray.first.get_str() + "," + ray.second.get_str() + "): " + o.detail + "; ";
  }
  return {ok, detail};
}

Outcome one_parameter_ray() {
  SeriesParams p;
  p.rays = {{1, 1}};
  const Report r = verify_series(p);
  int found = 0;
  int passed = 0;
  for (const auto& c : r.checks) {
    if (c.id.find("one_parameter") == std::string::npos) continue;
    ++found;
    passed += c.pass ? 1 : 0;
  }
  return {found > 0 && passed == found, std::to_string(passed) + "/" + std::to_string(found) + " one-parameter checks"};
}

Outcome engine_properties() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto runs = proptest::all_properties(kPropertyInstances, 2024);
  const double s = seconds_since(t0);
  bool ok = s < kPropertySeconds;
  std::string detail;
  for (const auto& r : runs) {
    ok = ok && r.failures == 0 && r.instances >= kPropertyInstances;
    detail += r.name + " " + std::to_string(r.instances - r.failures) + "/" + std::to_string(r.instances) + "; ";
    if (r.failures > 0) detail += "counterexample: " + r.first_failure + "; ";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", s, kPropertySeconds);
  return {ok, detail + buf};
}

Outcome spot_checks() {
  SpotcheckOptions opt;
  opt.trials = kSpotTrials;
  opt.threshold = kSpotThreshold;
  const Report r = run_named_spotcheck("all", SuiteOptions{}, opt);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu checks, %d trials, max deviation %.3e (threshold %.0e)",
                r.checks.size() - r.failures(), r.checks.size(), kSpotTrials,
                r.params.value("max_deviation", 0.0), kSpotThreshold);
  return {r.all_passed() && !r.checks.empty(), buf};
}

}  // namespace

int main() {
  const SuiteOptions defaults;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 section2 suite", [&] { return timed_suite([&] { return verify_section2(defaults.section2); }, kSection2Seconds); }},
      {"2 section3 suite", [&] { return timed_suite([&] { return verify_section3(8); }, kSection3Seconds); }},
      {"3 appendix suite", [&] { return timed_suite([&] { return verify_appendix(6); }, kAppendixSeconds); }},
      {"4 series suite", series_per_ray},
      {"5 mside suite", [&] { return timed_suite([&] { return verify_mside(8); }, kMSideSeconds); }},
      {"6 one-parameter ray", one_parameter_ray},
      {"7 engine properties", engine_properties},
      {"8 numeric spot checks", spot_checks},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
