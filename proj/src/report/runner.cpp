#include <omp.h>

#include <chrono>
#include <exception>
#include <sstream>

#include "glpq/report/report.hpp"

namespace glpq {

namespace {

CheckResult run_one(const CheckTask& t) {
  CheckResult r{t.id, t.anchor, false, std::nullopt};
  try {
    r.witness = t.run();
    r.pass = !r.witness.has_value();
  } catch (const std::exception& e) {
    r.witness = std::string("error: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_serial(const std::vector<CheckTask>& tasks) {
  std::vector<CheckResult> out;
  out.reserve(tasks.size());
  for (const auto& t : tasks) out.push_back(run_one(t));
  return out;
}

std::vector<CheckResult> run_parallel(const std::vector<CheckTask>& tasks) {
  std::vector<CheckResult> out(tasks.size());
  const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_one(tasks[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks, ExecMode mode) {
  return mode == ExecMode::Serial ? run_serial(tasks) : run_parallel(tasks);
}

Report run_suite(std::string suite, nlohmann::ordered_json params, const std::vector<CheckTask>& tasks, ExecMode mode) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  r.checks = run_checks(tasks, mode);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = r.params;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["status"] = c.pass ? "pass" : "fail";
    if (c.witness) {
      cj["witness"] = *c.witness;
    } else {
      cj["witness"] = nullptr;
    }
    j["checks"].push_back(std::move(cj));
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]";
    if (!c.pass && c.witness) os << "\n     witness: " << *c.witness;
    os << '\n';
  }
  os << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed in "
     << r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace glpq
