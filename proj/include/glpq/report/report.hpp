#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace glpq {

struct CheckResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  /// Canonical string of the nonzero difference (or the error) on failure.
  std::optional<std::string> witness;
};

struct Report {
  std::string suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<CheckResult> checks;
  std::int64_t elapsed_ms = 0;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

enum class ExecMode { Serial, Parallel };

/// A deferred check. Exceptions thrown while running it become failures.
struct CheckTask {
  std::string id;
  std::string anchor;
  std::function<std::optional<std::string>()> run;  // nullopt = pass, else witness
};

/// Runs the tasks one after another (the reference order).
std::vector<CheckResult> run_serial(const std::vector<CheckTask>& tasks);
/// Runs the tasks on OpenMP threads; results keep the task order.
std::vector<CheckResult> run_parallel(const std::vector<CheckTask>& tasks);
std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks, ExecMode mode);

/// Runs the tasks and wraps the results in a timed Report.
Report run_suite(std::string suite, nlohmann::ordered_json params, const std::vector<CheckTask>& tasks, ExecMode mode);

nlohmann::ordered_json to_json(const Report& r);
/// One line per check plus a summary line.
std::string to_text(const Report& r);

}  // namespace glpq
