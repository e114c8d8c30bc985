#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glpq/report/report.hpp"

namespace glpq {

using Assignment = std::map<std::string, double>;

/// Floating evaluation of a whole identity family at one assignment.
/// `evaluate` returns, per check, the largest scaled deviation found, or
/// nullopt when the check hit a pole at this assignment.
struct NumericFamily {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> checks;  // (id, anchor)
  std::function<Assignment(std::mt19937_64&)> sample;
  /// Reason to reject a sampled assignment (too close to a pole), if any.
  std::function<std::optional<std::string>(const Assignment&)> guard;
  std::function<std::vector<std::optional<double>>(const Assignment&)> evaluate;
};

struct SpotcheckOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  double threshold = 1e-9;
  ExecMode mode = ExecMode::Parallel;
};

/// Draws `trials` accepted assignments (rejected draws are logged in the
/// report params), evaluates the family at each and reports, per check, the
/// maximum deviation against the threshold.
Report run_spotcheck(const NumericFamily& family, const SpotcheckOptions& opt);

std::string format_assignment(const Assignment& a);

}  // namespace glpq
