#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "glpq/coeff/ratfunc.hpp"

namespace glpq {

/// Finite sum of r(p, q, phi, x, y) * E1^k * E2^l with r a RatFunc and
/// integer k, l. E1, E2 are central invertible symbols standing for
/// e^{hx}, e^{hy}; psi is always written as 2 - phi.
class MCoefficient {
 public:
  using Key = std::pair<int, int>;

  /// The shared set {p, q, phi, x, y}.
  static const SymbolSetPtr& symbols();

  MCoefficient() = default;
  static MCoefficient constant(const mpq_class& c);
  static MCoefficient from_ratfunc(const RatFunc& r, int k = 0, int l = 0);
  /// p, q, phi, psi, x, y, E1 or E2.
  static MCoefficient symbol(const std::string& name);

  const std::map<Key, RatFunc>& terms() const { return terms_; }
  /// The E1^0 E2^0 part.
  RatFunc plain_part() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_single_term() const { return terms_.size() <= 1 && (terms_.empty() || terms_.begin()->second.is_single_term()); }

  MCoefficient operator+(const MCoefficient& o) const;
  MCoefficient operator-(const MCoefficient& o) const;
  MCoefficient operator*(const MCoefficient& o) const;
  MCoefficient operator-() const;
  MCoefficient& operator+=(const MCoefficient& o) { return *this = *this + o; }
  MCoefficient& operator*=(const MCoefficient& o) { return *this = *this * o; }
  bool operator==(const MCoefficient& o) const { return terms_ == o.terms_; }

  /// Only a single E-term with nonzero coefficient is a unit; otherwise
  /// throws NotAUnit.
  MCoefficient inverse() const;
  MCoefficient pow(int n) const;
  MCoefficient constant_like(const mpq_class& c) const { return constant(c); }
  MCoefficient scaled(const RatFunc& r) const;

  /// sigma_mu^-1: x, y -> x - phi, y - phi, E -> q^-1 E.
  MCoefficient shift_mu_inverse() const;
  /// sigma_nu^-1: x, y -> x - psi, y - psi, E -> p^-1 E.
  MCoefficient shift_nu_inverse() const;
  /// The forward shifts.
  MCoefficient shift_mu() const;
  MCoefficient shift_nu() const;
  /// x <-> y, phi <-> psi, p <-> q, E1 <-> E2.
  MCoefficient tau() const;

  /// Needs p, q, phi, x, y, E1, E2 in the assignment.
  double eval(const std::map<std::string, double>& at, double eps = 1e-12) const;

  std::string to_string() const;

 private:
  void add_term(const Key& k, const RatFunc& r);
  MCoefficient shifted(bool mu, int sign) const;

  std::map<Key, RatFunc> terms_;
};

}  // namespace glpq
