#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace glpq {

/// One signed product `coeff*mono` of a printed sum; an empty `mono` is the
/// bare number.
struct FormattedTerm {
  mpq_class coeff;
  std::string mono;
};

/// Joins terms as "a - 2*b + 1/2": unit coefficients are dropped and signs
/// become separators.
std::string join_terms(const std::vector<FormattedTerm>& terms);

}  // namespace glpq
