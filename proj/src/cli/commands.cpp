#include "glpq/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "glpq/mside/suites.hpp"

namespace glpq {

namespace {

Report merged(const std::vector<std::pair<std::string, Report>>& parts, const std::string& suite) {
  Report all;
  all.suite = suite;
  for (const auto& [name, r] : parts) {
    all.params[name] = r.params;
    for (CheckResult c : r.checks) {
      c.id = name + "/" + c.id;
      all.checks.push_back(std::move(c));
    }
    all.elapsed_ms += r.elapsed_ms;
  }
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"section2", "section3", "appendix", "series", "mside"};
  return names;
}

Report run_named_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "section2") return verify_section2(opt.section2, opt.mode);
  if (name == "section3") return verify_section3(opt.section3_n_max, opt.mode);
  if (name == "appendix") return verify_appendix(opt.appendix_k_max, opt.mode);
  if (name == "series") return verify_series(opt.series, opt.mode);
  if (name == "mside") return verify_mside(opt.mside_n_max, opt.mode);
  if (name == "all") {
    std::vector<std::pair<std::string, Report>> parts;
    for (const auto& n : suite_names()) parts.emplace_back(n, run_named_suite(n, opt));
    return merged(parts, "all");
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

NumericFamily named_family(const std::string& name, const SuiteOptions& opt) {
  if (name == "section2") return section2_family(opt.section2);
  if (name == "section3") return section3_family(opt.section3_n_max);
  if (name == "appendix") return appendix_family(opt.appendix_k_max);
  if (name == "series") return series_family(opt.series);
  if (name == "mside") return mside_family(opt.mside_n_max);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Report run_named_spotcheck(const std::string& name, const SuiteOptions& opt, const SpotcheckOptions& spot) {
  if (name == "all") {
    std::vector<std::pair<std::string, Report>> parts;
    double worst = 0.0;
    for (const auto& n : suite_names()) {
      parts.emplace_back(n, run_spotcheck(named_family(n, opt), spot));
      worst = std::max(worst, parts.back().second.params.value("max_deviation", 0.0));
    }
    Report r = merged(parts, "spotcheck:all");
    r.params["max_deviation"] = worst;
    return r;
  }
  const auto start = std::chrono::steady_clock::now();
  Report r = run_spotcheck(named_family(name, opt), spot);
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::pair<mpq_class, mpq_class> parse_ray(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("ray must be written a,b: '" + text + "'");
  try {
    mpq_class a(text.substr(0, comma));
    mpq_class b(text.substr(comma + 1));
    if (a.get_den() == 0 || b.get_den() == 0) throw std::invalid_argument("zero denominator");
    a.canonicalize();
    b.canonicalize();
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("ray components must be rationals: '" + text + "'");
  }
}

}  // namespace glpq
