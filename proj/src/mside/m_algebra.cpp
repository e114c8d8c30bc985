#include "glpq/mside/m_algebra.hpp"

#include "glpq/coeff/errors.hpp"
#include "glpq/nc/builder.hpp"

namespace glpq {

namespace {

RatFunc r(const std::string& name) {
  if (name == "psi") return RatFunc::constant(MCoefficient::symbols(), 2) - RatFunc::symbol(MCoefficient::symbols(), "phi");
  return RatFunc::symbol(MCoefficient::symbols(), name);
}
RatFunc rc(const mpq_class& c) { return RatFunc::constant(MCoefficient::symbols(), c); }
MCoefficient mc(const RatFunc& f) { return MCoefficient::from_ratfunc(f); }

}  // namespace

MSide::MSide() {
  PresentationBuilder<MCoefficient> b(MCoefficient::constant(1), "mside");
  b.odd("mu").odd("nu");
  b.relation("nu", "mu", MCoefficient::constant(-1));
  b.shift("mu", [](const MCoefficient& c) { return c.shift_mu_inverse(); });
  b.shift("nu", [](const MCoefficient& c) { return c.shift_nu_inverse(); });
  pres_ = b.build();
  mu_ = MElement::generator(pres_, "mu");
  nu_ = MElement::generator(pres_, "nu");
}

MMatrix MSide::m_power(int n) const {
  if (n < 1) throw UnsupportedNegativeN();
  const MMatrix m = M();
  MMatrix out = m;
  for (int k = 1; k < n; ++k) out = out * m;
  return out;
}

RatFunc MSide::F(int n) {
  const RatFunc x = r("x"), y = r("y"), phi = r("phi"), psi = r("psi");
  const RatFunc s = x - y;
  return x.pow(n) / (rc(2) * (s - psi)) - (x + phi + psi).pow(n) / (rc(2) * (s + phi)) -
         (y + psi).pow(n) / ((s + phi) * (s - psi));
}

RatFunc MSide::G(int n) {
  const RatFunc x = r("x"), y = r("y"), phi = r("phi");
  return ((x + phi).pow(n) - y.pow(n)) / (x - y + phi);
}

RatFunc MSide::F_tau(int n) { return MCoefficient::from_ratfunc(F(n)).tau().plain_part(); }
RatFunc MSide::G_tau(int n) { return MCoefficient::from_ratfunc(G(n)).tau().plain_part(); }

MElement MSide::times_mu_nu_right(const MCoefficient& c) const { return mu_ * nu_ * scalar(c); }
MElement MSide::times_mu_right(const MCoefficient& c) const { return mu_ * scalar(c); }
MElement MSide::times_nu_right(const MCoefficient& c) const { return nu_ * scalar(c); }

MMatrix MSide::closed_power(int n, FnPlacement placement) const {
  const bool right = placement == FnPlacement::RightOfOdd;
  const auto with = [&](const MElement& odd, const RatFunc& f) { return right ? odd * scalar(mc(f)) : scalar(mc(f)) * odd; };
  const MElement mn = mu_ * nu_;
  const MElement nm = nu_ * mu_;
  const MElement a = scalar(mc(r("x").pow(n))) - with(mn, F(n));
  const MElement b = with(mu_, G(n));
  const MElement c = with(nu_, G_tau(n));
  const MElement d = scalar(mc(r("y").pow(n))) - with(nm, F_tau(n));
  return MMatrix(a, b, c, d);
}

MMatrix MSide::build_T_from_M() const {
  const RatFunc p = r("p"), q = r("q"), phi = r("phi"), psi = r("psi");
  const RatFunc s = r("x") - r("y");
  const RatFunc pq = p * q;
  const RatFunc half = rc(mpq_class(1, 2));
  const RatFunc den_inv = ((s + phi) * (s - psi)).inverse();
  const MCoefficient E1 = MCoefficient::symbol("E1");
  const MCoefficient E2 = MCoefficient::symbol("E2");
  const MCoefficient brace_a =
      E1.scaled((phi + pq * psi) * half - (pq - rc(1)) * half * s) - E2.scaled(p);
  const MCoefficient brace_d =
      E2.scaled((psi + pq * phi) * half + (pq - rc(1)) * half * s) - E1.scaled(q);
  const MElement a = scalar(E1) - mu_ * nu_ * scalar(mc(den_inv)) * scalar(brace_a);
  const MElement d = scalar(E2) - nu_ * mu_ * scalar(mc(den_inv)) * scalar(brace_d);
  const MElement beta = mu_ * scalar(mc((s + phi).inverse())) * scalar(E1.scaled(q) - E2);
  const MElement gamma = nu_ * scalar(mc((psi - s).inverse())) * scalar(E2.scaled(p) - E1);
  return MMatrix(a, beta, gamma, d);
}

MElement MSide::tau(const MElement& e) const {
  MElement out = zero();
  for (const auto& [m, c] : e.terms()) {
    MElement word = one();
    // Stored order is mu before nu; the images come out as nu before mu.
    if (m.has_odd(0)) word = word * nu_;
    if (m.has_odd(1)) word = word * mu_;
    out += scalar(c.tau()) * word;
  }
  return out;
}

MMatrix MSide::tau(const MMatrix& m) const { return MMatrix(tau(m.a11()), tau(m.a12()), tau(m.a21()), tau(m.a22())); }

std::vector<std::pair<std::string, MElement>> MSide::bracket_relations(const MElement& x, const MElement& y,
                                                                       const MElement& mu, const MElement& nu,
                                                                       const MElement& phi,
                                                                       const MElement& psi) const {
  return {
      {"[x,mu]=phi*mu", commutator(x, mu) - phi * mu},
      {"[y,mu]=phi*mu", commutator(y, mu) - phi * mu},
      {"mu^2=0", mu * mu},
      {"[x,nu]=psi*nu", commutator(x, nu) - psi * nu},
      {"[y,nu]=psi*nu", commutator(y, nu) - psi * nu},
      {"nu^2=0", nu * nu},
      {"[x,y]=0", commutator(x, y)},
      {"mu*nu+nu*mu=0", anticommutator(mu, nu)},
  };
}

}  // namespace glpq
