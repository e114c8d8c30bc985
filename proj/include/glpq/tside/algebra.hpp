#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "glpq/coeff/errors.hpp"
#include "glpq/coeff/ratfunc.hpp"
#include "glpq/coeff/real.hpp"
#include "glpq/nc/builder.hpp"
#include "glpq/nc/element.hpp"
#include "glpq/nc/relations.hpp"
#include "glpq/nc/supermatrix.hpp"

namespace glpq {

template <Scalar S>
struct PowerBlocks {
  int n = 0;
  Element<S> A, B, C, D;
};

template <Scalar S>
struct Crout {
  SuperMatrix<S> lower;
  SuperMatrix<S> upper;
};

/// The algebra generated by a, d (invertible, even) and beta, gamma (odd)
/// with the two-parameter relations, over any scalar ring holding p and q.
template <Scalar S>
class TSide {
 public:
  using E = Element<S>;
  using M = SuperMatrix<S>;
  using PresPtr = std::shared_ptr<const Presentation<S>>;

  TSide(S one, S p, S q) : one_(std::move(one)), p_(std::move(p)), q_(std::move(q)) {
    // da = ad - (p - q^-1) gamma beta; beta a = q^-1 a beta; gamma a = p^-1 a gamma;
    // gamma beta = -q p^-1 beta gamma.
    PresentationBuilder<S> b(one_, "tside");
    b.even("a", true).even("d", true).odd("beta").odd("gamma");
    b.relation("d", "a", one_, {{-(p_ - q_.inverse()), {{"gamma", 1}, {"beta", 1}}}});
    b.relation("beta", "a", q_.inverse());
    b.relation("beta", "d", q_.inverse());
    b.relation("gamma", "a", p_.inverse());
    b.relation("gamma", "d", p_.inverse());
    b.relation("gamma", "beta", -(q_ * p_.inverse()));
    pres_ = b.build();
    a_ = E::generator(pres_, "a");
    d_ = E::generator(pres_, "d");
    beta_ = E::generator(pres_, "beta");
    gamma_ = E::generator(pres_, "gamma");
    ainv_ = E::generator(pres_, "a", -1);
    dinv_ = E::generator(pres_, "d", -1);
  }

  const PresPtr& presentation() const { return pres_; }
  const S& one() const { return one_; }
  const S& p() const { return p_; }
  const S& q() const { return q_; }
  S c(long v) const { return one_.constant_like(v); }
  /// s^n for any integer n.
  static S spow(const S& s, int n) {
    S base = n < 0 ? s.inverse() : s;
    S r = s.constant_like(1);
    for (int k = 0; k < (n < 0 ? -n : n); ++k) r = r * base;
    return r;
  }

  const E& a() const { return a_; }
  const E& d() const { return d_; }
  const E& beta() const { return beta_; }
  const E& gamma() const { return gamma_; }
  const E& a_inv() const { return ainv_; }
  const E& d_inv() const { return dinv_; }
  E scalar(const S& s) const { return E::scalar(pres_, s); }
  E unit() const { return E::one(pres_); }
  E zero() const { return E(pres_); }
  /// Normal form of the word, e.g. {{"beta",1},{"a",n-1}}.
  E word(const std::vector<std::pair<std::string, int>>& w, const S& coeff) const {
    return E::word(pres_, w, coeff);
  }

  M T() const { return M(a_, beta_, gamma_, d_); }
  M identity() const { return M::identity(pres_); }

  E delta1() const { return a_ * d_ - beta_ * gamma_ * scalar(p_.inverse()); }
  E delta2() const { return d_ * a_ - gamma_ * beta_ * scalar(q_.inverse()); }

  /// (A - B D^-1 C) D^-1 with D an even unit.
  E sdet(const M& X) const { return superdeterminant(X); }
  /// A (D - C A^-1 B)^-1 with A an even unit.
  E sdet_via_upper(const M& X) const {
    const E ainv = invert_even_unit(X.a11());
    return X.a11() * invert_even_unit(X.a22() - X.a21() * ainv * X.a12());
  }

  /// The displayed super-inverse built from Delta_1 and Delta_2.
  M sinverse() const {
    const E i1 = invert_even_unit(delta1());
    const E i2 = invert_even_unit(delta2());
    return M(d_ * i1, (beta_ * i2).scaled(-q_.inverse()), (gamma_ * i1).scaled(-p_.inverse()), a_ * i2);
  }

  /// Block inverse through the Schur complement of the top-left entry.
  M block_inverse(const M& X) const {
    const E ainv = invert_even_unit(X.a11());
    const E sinv = invert_even_unit(X.a22() - X.a21() * ainv * X.a12());
    const E top_right = -(ainv * X.a12() * sinv);
    const E bottom_left = -(sinv * X.a21() * ainv);
    const E top_left = ainv + ainv * X.a12() * sinv * X.a21() * ainv;
    return M(top_left, top_right, bottom_left, sinv);
  }

  M power(const M& X, int n) const {
    if (n < 0) return power(block_inverse(X), -n);
    M r = identity();
    for (int k = 0; k < n; ++k) r = r * X;
    return r;
  }

  /// Lower-times-unitriangular factorization of X.
  Crout<S> crout(const M& X) const {
    const E ainv = invert_even_unit(X.a11());
    const E corner = ainv * X.a12();
    M lower(X.a11(), zero(), X.a21(), X.a22() - X.a21() * corner);
    M upper(unit(), corner, zero(), unit());
    return {lower, upper};
  }

  /// (1 - (pq)^-N) / (1 - (pq)^-1).
  S bracket(int N) const {
    const S inv = (p_ * q_).inverse();
    return (one_ - spow(inv, N)) * (one_ - inv).inverse();
  }

  /// F_n(u, s*v) times the odd pair, summed from its definition.
  E F(int n, const E& u, const E& v, const S& s, const E& odd_pair) const {
    E r = zero();
    for (int k = 0; k <= n - 2; ++k) {
      r += (u.pow(n - k - 2) * v.pow(k)).scaled(bracket(n - k - 1) * spow(s, k)) * odd_pair;
    }
    return r;
  }
  E G(int n, const E& u, const E& v, const S& s, const E& odd) const {
    E r = zero();
    for (int k = 0; k <= n - 1; ++k) r += (u.pow(n - k - 1) * v.pow(k)).scaled(spow(s, k)) * odd;
    return r;
  }

  PowerBlocks<S> closed_power_blocks(int n) const {
    if (n < 1) throw UnsupportedNegativeN();
    const S qi = q_.inverse();
    const S pi = p_.inverse();
    PowerBlocks<S> b;
    b.n = n;
    b.A = a_.pow(n) + F(n, a_, d_, qi, beta_ * gamma_);
    b.B = G(n, a_, d_, qi, beta_);
    b.D = d_.pow(n) + F(n, d_, a_, pi, gamma_ * beta_);
    b.C = G(n, d_, a_, pi, gamma_);
    return b;
  }

  /// Right-hand side of the closed sdet power formula at integer n.
  E sdet_power_closed(int n) const {
    const S coeff = -(p_ * (spow(p_, -n) - spow(q_, n)) * (p_ - q_.inverse()).inverse());
    return word({{"a", n}, {"d", -n}}, one_) + word({{"a", n - 1}, {"gamma", 1}, {"d", -n - 1}, {"beta", 1}}, coeff);
  }

  /// Differences that vanish iff the entries of X satisfy the defining
  /// relations with parameters (P, Q).
  std::vector<std::pair<std::string, E>> gl_relations(const M& X, const S& P, const S& Q) const {
    return gl_relation_differences(X, P, Q);
  }

 private:
  S one_, p_, q_;
  PresPtr pres_;
  E a_, d_, beta_, gamma_, ainv_, dinv_;
};

/// Exact instance over Q(p, q).
inline TSide<RatFunc> make_exact_tside() {
  static const SymbolSetPtr symbols = SymbolSet::make({"p", "q"});
  return TSide<RatFunc>(RatFunc::constant(symbols, 1), RatFunc::symbol(symbols, "p"), RatFunc::symbol(symbols, "q"));
}

inline TSide<Real> make_real_tside(double p, double q) { return TSide<Real>(Real(1.0), Real(p), Real(q)); }

}  // namespace glpq
