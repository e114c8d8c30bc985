#include "glpq/series/series.hpp"

#include <stdexcept>

#include "glpq/coeff/errors.hpp"
#include "glpq/nc/builder.hpp"

namespace glpq {

namespace {

int adic_degree(const Monomial& m) { return m.even_degree() + m.odd_count(); }

mpq_class inv_factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return mpq_class(mpz_class(1), f);
}

}  // namespace

void SeriesConfig::validate() const {
  if (alpha == 0 || beta == 0) throw InvalidRay("ray components must be nonzero: " + ray_label());
  if (alpha + beta == 0) throw InvalidRay("h = (h1 + h2)/2 vanishes on ray " + ray_label());
  if (N < 1) throw std::invalid_argument("truncation weight N must be at least 1");
  if (K < N + 2) throw std::invalid_argument("Laurent order K must be at least N + 2");
}

std::string SeriesConfig::ray_label() const { return "(" + alpha.get_str() + "," + beta.get_str() + ")"; }

SeriesAlgebra::SeriesAlgebra(SeriesConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  q_ = TruncLaurent::exp_series(cfg_.alpha, cfg_.K);
  p_ = TruncLaurent::exp_series(cfg_.beta, cfg_.K);
  qi_ = TruncLaurent::exp_series(-cfg_.alpha, cfg_.K);
  pi_ = TruncLaurent::exp_series(-cfg_.beta, cfg_.K);
  const TruncLaurent one = c(1);

  Truncation<TruncLaurent> trunc;
  trunc.max_weight = cfg_.N;
  trunc.weight = [](const Monomial& m, const TruncLaurent& x) { return term_weight(adic_degree(m), x); };
  const int n = cfg_.N;
  trunc.finish = [n](const Monomial& m, TruncLaurent& x) { weight_filter(adic_degree(m), x, n); };

  // From a = 1 + A, d = 1 + D: DA = AD + (q - p^-1) beta gamma,
  // beta A = q^-1 A beta + (q^-1 - 1) beta, gamma A = p^-1 A gamma + (p^-1 - 1) gamma
  // (same with D), gamma beta = -q p^-1 beta gamma.
  PresentationBuilder<TruncLaurent> b(one, "series");
  b.even("A", false).even("D", false).odd("beta").odd("gamma");
  b.relation("D", "A", one, {{q_ - pi_, {{"beta", 1}, {"gamma", 1}}}});
  b.relation("beta", "A", qi_, {{qi_ - one, {{"beta", 1}}}});
  b.relation("beta", "D", qi_, {{qi_ - one, {{"beta", 1}}}});
  b.relation("gamma", "A", pi_, {{pi_ - one, {{"gamma", 1}}}});
  b.relation("gamma", "D", pi_, {{pi_ - one, {{"gamma", 1}}}});
  b.relation("gamma", "beta", -(q_ * pi_));
  b.truncation(trunc);
  pres_ = b.build();
  A_ = SeriesElement::generator(pres_, "A");
  D_ = SeriesElement::generator(pres_, "D");
  beta_ = SeriesElement::generator(pres_, "beta");
  gamma_ = SeriesElement::generator(pres_, "gamma");
}

SeriesElement SeriesAlgebra::from_comm(const CommSeries2& s) const {
  SeriesElement r = zero();
  for (const auto& [k, x] : s.terms()) r += SeriesElement::word(pres_, {{"A", k.first}, {"D", k.second}}, x);
  return r;
}

namespace {

void require_positive_weight(const SeriesElement& n, int max_weight) {
  for (const auto& [m, c] : n.terms()) {
    if (term_weight(adic_degree(m), c) < 1) {
      throw std::invalid_argument("series argument must have positive weight");
    }
  }
  (void)max_weight;
}

}  // namespace

SeriesElement SeriesAlgebra::log_one_plus(const SeriesElement& n) const {
  require_positive_weight(n, cfg_.N);
  SeriesElement r = zero();
  SeriesElement power = one();
  for (int k = 1; k <= cfg_.N; ++k) {
    power = power * n;
    r += power.scaled(c(mpq_class(k % 2 == 1 ? 1 : -1, k)));
  }
  return r;
}

SeriesElement SeriesAlgebra::exp_nilpotent(const SeriesElement& n) const {
  require_positive_weight(n, cfg_.N);
  SeriesElement r = one();
  SeriesElement power = one();
  for (int k = 1; k <= cfg_.N; ++k) {
    power = power * n;
    r += power.scaled(c(inv_factorial(k)));
  }
  return r;
}

SeriesElement SeriesAlgebra::inverse_one_plus(const SeriesElement& n) const {
  require_positive_weight(n, cfg_.N);
  SeriesElement r = one();
  SeriesElement power = one();
  for (int k = 1; k <= cfg_.N; ++k) {
    power = power * (-n);
    r += power;
  }
  return r;
}

SeriesMatrix SeriesAlgebra::log_T() const {
  const SeriesMatrix x = T() - identity();
  SeriesMatrix power = x;
  SeriesMatrix r = x;
  for (int n = 2; n <= cfg_.N; ++n) {
    power = power * x;
    r = r + power.scaled(c(mpq_class(n % 2 == 1 ? 1 : -1, n)));
  }
  return r;
}

SeriesMatrix SeriesAlgebra::matrix_exp(const SeriesMatrix& L) const {
  SeriesMatrix r = identity();
  SeriesMatrix power = identity();
  for (int n = 1; n <= cfg_.N; ++n) {
    power = (power * L).scaled(c(mpq_class(1, n)));
    r = r + power;
  }
  return r;
}

SeriesMatrix SeriesAlgebra::closed_t_minus_i_power(int n) const {
  if (n < 1) throw UnsupportedNegativeN();
  const SeriesElement pq_a = a().scaled(pi_ * qi_) - one();
  const SeriesElement pq_d = d().scaled(pi_ * qi_) - one();
  const SeriesElement qd = d().scaled(qi_) - one();
  const SeriesElement pa = a().scaled(pi_) - one();
  SeriesElement At = A_.pow(n);
  SeriesElement Dt = D_.pow(n);
  for (int j = 0; j <= n - 2; ++j) {
    for (int k = 0; k <= n - j - 2; ++k) {
      At += A_.pow(k) * pq_a.pow(n - k - j - 2) * qd.pow(j) * beta_ * gamma_;
      Dt += D_.pow(k) * pq_d.pow(n - k - j - 2) * pa.pow(j) * gamma_ * beta_;
    }
  }
  SeriesElement Bt = zero();
  SeriesElement Ct = zero();
  for (int j = 0; j <= n - 1; ++j) {
    Bt += A_.pow(n - j - 1) * qd.pow(j) * beta_;
    Ct += D_.pow(n - j - 1) * pa.pow(j) * gamma_;
  }
  return SeriesMatrix(At, Bt, Ct, Dt);
}

CommSeries2 SeriesAlgebra::ln_a() const { return log_divided_difference({comm_A()}); }
CommSeries2 SeriesAlgebra::ln_d() const { return log_divided_difference({comm_D()}); }

CommSeries2 SeriesAlgebra::g_beta() const {
  const TruncLaurent one = c(1);
  return log_divided_difference({comm_A(), comm_constant(qi_ - one) + comm_D().scaled(qi_)});
}

CommSeries2 SeriesAlgebra::g_gamma() const {
  const TruncLaurent one = c(1);
  return log_divided_difference({comm_D(), comm_constant(pi_ - one) + comm_A().scaled(pi_)});
}

CommSeries2 SeriesAlgebra::f_q() const {
  const TruncLaurent one = c(1);
  const CommSeries2 qa = comm_constant(q_ - one) + comm_A().scaled(q_);
  const CommSeries2 pa = comm_constant(pi_ - one) + comm_A().scaled(pi_);
  return log_divided_difference({qa, pa, comm_D()}).scaled(q_ * q_);
}

CommSeries2 SeriesAlgebra::f_p() const {
  const TruncLaurent one = c(1);
  const CommSeries2 pd = comm_constant(p_ - one) + comm_D().scaled(p_);
  const CommSeries2 qd = comm_constant(qi_ - one) + comm_D().scaled(qi_);
  return log_divided_difference({pd, qd, comm_A()}).scaled(p_ * p_);
}

SeriesMatrix SeriesAlgebra::hm_closed() const {
  const SeriesElement x = from_comm(ln_a()) + from_comm(f_q()) * beta_ * gamma_;
  const SeriesElement mu = from_comm(g_beta()) * beta_;
  const SeriesElement nu = from_comm(g_gamma()) * gamma_;
  const SeriesElement y = from_comm(ln_d()) + from_comm(f_p()) * gamma_ * beta_;
  return SeriesMatrix(x, mu, nu, y);
}

}  // namespace glpq
