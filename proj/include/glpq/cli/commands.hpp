#pragma once

#include <string>
#include <vector>

#include "glpq/report/report.hpp"
#include "glpq/report/spotcheck.hpp"
#include "glpq/series/suites.hpp"
#include "glpq/tside/suites.hpp"

namespace glpq {

/// Parameters of every suite; defaults are the documented ones.
struct SuiteOptions {
  Section2Params section2;
  int section3_n_max = 8;
  int appendix_k_max = 6;
  SeriesParams series;
  int mside_n_max = 8;
  ExecMode mode = ExecMode::Parallel;
};

/// section2, section3, appendix, series, mside.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all" (ids are then prefixed with the
/// suite name and params nest per suite). Throws std::invalid_argument for
/// an unknown name.
Report run_named_suite(const std::string& name, const SuiteOptions& opt);

NumericFamily named_family(const std::string& name, const SuiteOptions& opt);

/// Spot checks of one suite, or all of them for "all".
Report run_named_spotcheck(const std::string& name, const SuiteOptions& opt, const SpotcheckOptions& spot);

/// Parses "a,b" into a ray; throws std::invalid_argument.
std::pair<mpq_class, mpq_class> parse_ray(const std::string& text);

}  // namespace glpq
