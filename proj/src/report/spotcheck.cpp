#include "glpq/report/spotcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <stdexcept>

namespace glpq {

std::string format_assignment(const Assignment& a) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [k, v] : a) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

Report run_spotcheck(const NumericFamily& family, const SpotcheckOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(opt.seed);
  constexpr int kMaxDrawsPerTrial = 1000;

  std::vector<Assignment> accepted;
  nlohmann::ordered_json rejected = nlohmann::ordered_json::array();
  while (static_cast<int>(accepted.size()) < opt.trials) {
    Assignment a;
    std::optional<std::string> why;
    int draws = 0;
    do {
      a = family.sample(rng);
      why = family.guard ? family.guard(a) : std::nullopt;
      if (why) rejected.push_back(format_assignment(a) + ": " + *why);
    } while (why && ++draws < kMaxDrawsPerTrial);
    if (why) throw std::runtime_error("spotcheck sampler keeps hitting poles");
    accepted.push_back(std::move(a));
  }

  const std::size_t n_checks = family.checks.size();
  std::vector<std::vector<std::optional<double>>> dev(accepted.size());
  std::vector<std::string> errors(accepted.size());
  const long n_trials = static_cast<long>(accepted.size());
  auto one_trial = [&](long i) {
    try {
      dev[static_cast<std::size_t>(i)] = family.evaluate(accepted[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  };
  if (opt.mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_trials; ++i) one_trial(i);
  } else {
    for (long i = 0; i < n_trials; ++i) one_trial(i);
  }

  Report r;
  r.suite = "spotcheck:" + family.suite;
  r.params["trials"] = opt.trials;
  r.params["seed"] = opt.seed;
  r.params["threshold"] = opt.threshold;
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  double overall = 0.0;
  for (std::size_t c = 0; c < n_checks; ++c) {
    double worst = 0.0;
    std::size_t worst_trial = 0;
    std::string error;
    for (std::size_t t = 0; t < accepted.size(); ++t) {
      if (!errors[t].empty()) {
        error = errors[t];
        continue;
      }
      const std::optional<double>& d = dev[t].at(c);
      if (!d) {
        skipped.push_back(family.checks[c].first + " at " + format_assignment(accepted[t]));
        continue;
      }
      if (*d > worst || std::isnan(*d)) {
        worst = std::isnan(*d) ? INFINITY : *d;
        worst_trial = t;
      }
    }
    overall = std::max(overall, worst);
    CheckResult cr{family.checks[c].first, family.checks[c].second, error.empty() && worst < opt.threshold,
                   std::nullopt};
    if (!error.empty()) {
      cr.witness = "error: " + error;
    } else if (!cr.pass) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3e", worst);
      cr.witness = std::string("max deviation ") + buf + " at " + format_assignment(accepted[worst_trial]);
    }
    r.checks.push_back(std::move(cr));
  }
  r.params["max_deviation"] = overall;
  r.params["rejected_draws"] = rejected;
  r.params["skipped"] = skipped;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace glpq
