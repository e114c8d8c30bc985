#pragma once

#include <vector>

#include "glpq/coeff/trunc_laurent.hpp"
#include "glpq/report/identity.hpp"
#include "glpq/report/report.hpp"
#include "glpq/report/spotcheck.hpp"
#include "glpq/series/series.hpp"

namespace glpq {

struct SeriesParams {
  int N = 6;
  int K = kDefaultLaurentOrder;
  std::vector<std::pair<mpq_class, mpq_class>> rays = {{1, 1}, {1, 2}, {2, 1}, {1, -3}, {3, -1}};
};

/// Identities of the logarithm direction on one ray. All relations are
/// stated for L = h*M, e.g. [x, mu] = (h1/h) mu becomes [Lx, Lmu] = h1 Lmu,
/// so no division by h is needed.
std::vector<Identity<TruncLaurent>> series_identities(const SeriesAlgebra& s);

Report verify_series(const SeriesParams& params, ExecMode mode = ExecMode::Parallel);

/// Floating check of the scalar closed forms: the truncated expansions of
/// ln a, g and f_q, f_p against direct evaluation of their quotient formulas
/// at small random (A, D, t), plus every exact series identity evaluated at t.
NumericFamily series_family(const SeriesParams& params);

}  // namespace glpq
