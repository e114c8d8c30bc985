#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>

#include "glpq/coeff/trunc_laurent.hpp"
#include "glpq/nc/element.hpp"
#include "glpq/nc/supermatrix.hpp"
#include "glpq/series/comm_series.hpp"

namespace glpq {

/// Truncation weight N, Laurent order K and the ray h1 = alpha*t,
/// h2 = beta*t along which q = exp(h1), p = exp(h2).
struct SeriesConfig {
  int N = 6;
  int K = kDefaultLaurentOrder;
  mpq_class alpha = 1;
  mpq_class beta = 1;

  /// Throws InvalidRay for alpha = 0, beta = 0 or alpha + beta = 0, and
  /// std::invalid_argument for K < N + 2 or N < 1.
  void validate() const;
  std::string ray_label() const;
};

using SeriesElement = Element<TruncLaurent>;
using SeriesMatrix = SuperMatrix<TruncLaurent>;

/// The algebra near the identity: a = 1 + A, d = 1 + D with beta, gamma,
/// over Laurent series in t, truncated at weight (adic degree + t-valuation)
/// <= N. Products go through the presentation, so every truncation is done
/// by the engine.
class SeriesAlgebra {
 public:
  explicit SeriesAlgebra(SeriesConfig cfg);

  const SeriesConfig& config() const { return cfg_; }
  const std::shared_ptr<const Presentation<TruncLaurent>>& presentation() const { return pres_; }

  TruncLaurent c(const mpq_class& v) const { return TruncLaurent::constant(v, cfg_.K); }
  const TruncLaurent& q() const { return q_; }
  const TruncLaurent& p() const { return p_; }
  const TruncLaurent& q_inv() const { return qi_; }
  const TruncLaurent& p_inv() const { return pi_; }
  TruncLaurent h1() const { return TruncLaurent::monomial(cfg_.alpha, 1, cfg_.K); }
  TruncLaurent h2() const { return TruncLaurent::monomial(cfg_.beta, 1, cfg_.K); }
  TruncLaurent h() const { return TruncLaurent::monomial((cfg_.alpha + cfg_.beta) / 2, 1, cfg_.K); }

  SeriesElement zero() const { return SeriesElement(pres_); }
  SeriesElement one() const { return SeriesElement::one(pres_); }
  SeriesElement scalar(const TruncLaurent& s) const { return SeriesElement::scalar(pres_, s); }
  const SeriesElement& A() const { return A_; }
  const SeriesElement& D() const { return D_; }
  const SeriesElement& beta() const { return beta_; }
  const SeriesElement& gamma() const { return gamma_; }
  SeriesElement a() const { return one() + A_; }
  SeriesElement d() const { return one() + D_; }

  SeriesMatrix T() const { return SeriesMatrix(a(), beta_, gamma_, d()); }
  SeriesMatrix identity() const { return SeriesMatrix::identity(pres_); }

  /// Places sum c_ij A^i D^j as A^i D^j (A left of D).
  SeriesElement from_comm(const CommSeries2& s) const;
  CommSeries2 comm_A() const { return CommSeries2::var_A(cfg_.N, cfg_.K); }
  CommSeries2 comm_D() const { return CommSeries2::var_D(cfg_.N, cfg_.K); }
  CommSeries2 comm_constant(const TruncLaurent& s) const { return CommSeries2::constant(s, cfg_.N); }

  /// ln(1 + n) and exp(n) for n of positive weight; (1 + n)^-1 likewise.
  SeriesElement log_one_plus(const SeriesElement& n) const;
  SeriesElement exp_nilpotent(const SeriesElement& n) const;
  SeriesElement inverse_one_plus(const SeriesElement& n) const;

  /// sum_{n=1}^{N} (-1)^(n+1)/n (T - I)^n.
  SeriesMatrix log_T() const;
  /// sum_{n=0}^{N} L^n / n! for L with entries of positive weight.
  SeriesMatrix matrix_exp(const SeriesMatrix& L) const;
  /// (T - I)^n from the displayed double sums.
  SeriesMatrix closed_t_minus_i_power(int n) const;

  /// ln[a, q^-1 d], ln[d, p^-1 a] (first divided differences of ln).
  CommSeries2 g_beta() const;
  CommSeries2 g_gamma() const;
  /// q^2 ln[qa, p^-1 a, d] and its swap p^2 ln[pd, q^-1 d, a].
  CommSeries2 f_q() const;
  CommSeries2 f_p() const;
  CommSeries2 ln_a() const;
  CommSeries2 ln_d() const;

  /// h*M assembled from the closed forms: ln a + f_q beta gamma, g beta,
  /// g gamma, ln d + f_p gamma beta.
  SeriesMatrix hm_closed() const;

 private:
  SeriesConfig cfg_;
  TruncLaurent q_, p_, qi_, pi_;
  std::shared_ptr<const Presentation<TruncLaurent>> pres_;
  SeriesElement A_, D_, beta_, gamma_;
};

}  // namespace glpq
