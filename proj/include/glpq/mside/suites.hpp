#pragma once

#include <string>
#include <vector>

#include "glpq/mside/m_algebra.hpp"
#include "glpq/report/identity.hpp"
#include "glpq/report/report.hpp"
#include "glpq/report/spotcheck.hpp"

namespace glpq {

/// Which placements of F_n, G_n reproduce M^n for every n in 1..n_max:
/// "right", "left", "both" or "neither".
std::string fn_reading(const MSide& m, int n_max);

/// Power blocks against the closed forms (denominators cleared), tau,
/// centrality of x - y, power additivity, and the reconstruction of T with
/// its relations and superdeterminant.
std::vector<Identity<MCoefficient>> mside_identities(const MSide& m, int n_max);

Report verify_mside(int n_max, ExecMode mode = ExecMode::Parallel);

/// The power blocks, the relations of the reconstructed T and its sdet at
/// random (p, q, phi, x, y, E1, E2), recomputed in floating point with the
/// shifts applied to the point and compared with the exact forms.
NumericFamily mside_family(int n_max);

}  // namespace glpq
