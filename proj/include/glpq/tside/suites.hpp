#pragma once

#include "glpq/report/report.hpp"
#include "glpq/report/spotcheck.hpp"

namespace glpq {

struct Section2Params {
  int n_lo = -6;
  int n_hi = 6;
  /// Range of both exponents in the a^n d^m exchange.
  int m_lo = -4;
  int m_hi = 4;
};

Report verify_section2(const Section2Params& params, ExecMode mode = ExecMode::Parallel);
Report verify_section3(int n_max, ExecMode mode = ExecMode::Parallel);
Report verify_appendix(int k_max, ExecMode mode = ExecMode::Parallel);

/// Floating counterparts of the suites above, sampled over (p, q).
NumericFamily section2_family(const Section2Params& params);
NumericFamily section3_family(int n_max);
NumericFamily appendix_family(int k_max);

/// Rejects (p, q) with pq within `margin` of +1 or -1.
std::optional<std::string> pq_pole_guard(double p, double q, double margin = 0.05);

}  // namespace glpq
