#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "glpq/mside/mcoefficient.hpp"
#include "glpq/nc/element.hpp"
#include "glpq/nc/supermatrix.hpp"

namespace glpq {

using MElement = Element<MCoefficient>;
using MMatrix = SuperMatrix<MCoefficient>;

/// Where a displayed coefficient function sits relative to the odd word it
/// multiplies: literally to its right (so it is shifted when moved to the
/// stored left position), or already on the left.
enum class FnPlacement { RightOfOdd, LeftOfOdd };

/// The exponential-parameter algebra: x, y are commuting coefficient
/// symbols, mu, nu are odd with mu nu = -nu mu, and f mu = mu sigma_mu(f),
/// f nu = nu sigma_nu(f).
class MSide {
 public:
  MSide();

  const std::shared_ptr<const Presentation<MCoefficient>>& presentation() const { return pres_; }

  MElement zero() const { return MElement(pres_); }
  MElement one() const { return MElement::one(pres_); }
  MElement scalar(const MCoefficient& c) const { return MElement::scalar(pres_, c); }
  /// Scalar element of p, q, phi, psi, x, y, E1 or E2.
  MElement sym(const std::string& name) const { return scalar(MCoefficient::symbol(name)); }
  const MElement& mu() const { return mu_; }
  const MElement& nu() const { return nu_; }
  MElement x() const { return sym("x"); }
  MElement y() const { return sym("y"); }

  MMatrix M() const { return MMatrix(x(), mu_, nu_, y()); }
  MMatrix identity() const { return MMatrix::identity(pres_); }
  /// M^n by iterated multiplication, n >= 1.
  MMatrix m_power(int n) const;

  /// F_n(x, y, phi, psi) and G_n(x, y, phi) as rational functions.
  static RatFunc F(int n);
  static RatFunc G(int n);
  /// The same with x <-> y, phi <-> psi.
  static RatFunc F_tau(int n);
  static RatFunc G_tau(int n);

  /// The displayed block form of M^n with the coefficient functions placed
  /// according to `placement`.
  MMatrix closed_power(int n, FnPlacement placement) const;

  /// coefficient * mu nu with the coefficient written to the right of mu nu.
  MElement times_mu_nu_right(const MCoefficient& c) const;
  MElement times_mu_right(const MCoefficient& c) const;
  MElement times_nu_right(const MCoefficient& c) const;

  /// (a, beta; gamma, d) assembled from x, y, mu, nu and E1, E2.
  MMatrix build_T_from_M() const;

  /// x <-> y, mu <-> nu, phi <-> psi, p <-> q, E1 <-> E2.
  MElement tau(const MElement& e) const;
  MMatrix tau(const MMatrix& m) const;

  /// The defining brackets as differences that vanish, evaluated on the
  /// given images of (x, y, mu, nu, phi, psi).
  std::vector<std::pair<std::string, MElement>> bracket_relations(const MElement& x, const MElement& y,
                                                                  const MElement& mu, const MElement& nu,
                                                                  const MElement& phi, const MElement& psi) const;

 private:
  std::shared_ptr<const Presentation<MCoefficient>> pres_;
  MElement mu_, nu_;
};

}  // namespace glpq
