#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "glpq/coeff/errors.hpp"
#include "glpq/coeff/polynomial.hpp"
#include "glpq/coeff/ratfunc.hpp"
#include "glpq/coeff/real.hpp"
#include "glpq/coeff/trunc_laurent.hpp"
#include "glpq/mside/mcoefficient.hpp"

using namespace glpq;

namespace {

const SymbolSetPtr& pq() {
  static const SymbolSetPtr s = SymbolSet::make({"p", "q"});
  return s;
}
RatFunc P() { return RatFunc::symbol(pq(), "p"); }
RatFunc Q() { return RatFunc::symbol(pq(), "q"); }
RatFunc C(const mpq_class& c) { return RatFunc::constant(pq(), c); }

}  // namespace

TEST(SymbolSet, KeepsOrderAndLooksUpNames) {
  const auto s = SymbolSet::make({"p", "q", "phi"});
  EXPECT_EQ(s->size(), 3u);
  EXPECT_EQ(*s->index_of("phi"), 2u);
  EXPECT_FALSE(s->index_of("x").has_value());
}

TEST(Polynomial, GcdOfSharedFactor) {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const Polynomial g = gcd((x + y) * (x - y) * Polynomial::constant(6), (x + y) * (x + y) * Polynomial::constant(4));
  EXPECT_EQ(g, (x + y) * Polynomial::constant(2));
}

TEST(Polynomial, ExactDivision) {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const auto q = ((x + y).pow(3)).divide_exact(x + y);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (x + y).pow(2));
  EXPECT_FALSE((x * x + y).divide_exact(x + y).has_value());
}

TEST(RatFunc, FieldAxiomExample) {
  const RatFunc lhs = (P() - Q().inverse()) * Q();
  EXPECT_EQ(lhs, P() * Q() - C(1));
  EXPECT_EQ(lhs / Q(), P() - Q().inverse());
}

TEST(RatFunc, BracketTwoReducesByGcd) {
  const RatFunc inv = (P() * Q()).inverse();
  const RatFunc bracket = (C(1) - inv.pow(2)) / (C(1) - inv);
  EXPECT_EQ(bracket, C(1) + inv);
  EXPECT_EQ(bracket.to_string(), "1 + p^-1*q^-1");
}

TEST(RatFunc, NumericEvaluation) {
  const RatFunc r = (P() * Q() - C(1)) / (P() - Q().inverse());
  EXPECT_DOUBLE_EQ(r.eval({{"p", 2.0}, {"q", 3.0}}), 3.0);
  const RatFunc inv = (P() * Q()).inverse();
  EXPECT_DOUBLE_EQ((C(1) + inv).eval({{"p", 2.0}, {"q", 2.0}}), 1.25);
  EXPECT_DOUBLE_EQ(C(0).eval({{"p", 7.0}, {"q", -1.0}}), 0.0);
}

TEST(RatFunc, EvaluationErrors) {
  const RatFunc r = C(1) / (P() - Q());
  EXPECT_THROW(r.eval({{"p", 1.0}, {"q", 1.0}}), NearPoleEvaluation);
  EXPECT_THROW(r.eval({{"p", 1.0}}), MissingSymbol);
  EXPECT_THROW(C(0).inverse(), DivisionByZero);
}

TEST(RatFunc, RepresentationIsCanonical) {
  // Same value reached two ways has the same numerator and denominator.
  const RatFunc a = (P() * P() - Q() * Q()) / (P() + Q());
  const RatFunc b = P() - Q();
  EXPECT_EQ(a.numerator(), b.numerator());
  EXPECT_EQ(a.denominator(), b.denominator());
  const RatFunc c = C(1) / (C(-2) * P() + C(4));
  EXPECT_GT(c.denominator().leading().coeff, 0);
}

TEST(RatFunc, CancellationProperty) {
  testgen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const RatFunc a = testgen::pq_scalar(rng, pq()) + testgen::pq_scalar(rng, pq());
    RatFunc b = testgen::pq_scalar(rng, pq()) + testgen::pq_scalar(rng, pq());
    if (b.is_zero()) continue;
    EXPECT_EQ(a * b / b, a);
  }
}

TEST(RatFunc, EvaluationIsAHomomorphism) {
  testgen::Rng rng(12);
  std::uniform_real_distribution<double> val(0.5, 2.0);
  for (int i = 0; i < 200; ++i) {
    const RatFunc a = testgen::pq_scalar(rng, pq()) + testgen::pq_scalar(rng, pq());
    const RatFunc b = testgen::pq_scalar(rng, pq()) + C(3);
    const std::map<std::string, double> at{{"p", val(rng)}, {"q", val(rng)}};
    const auto close = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)}); };
    try {
      EXPECT_TRUE(close((a + b).eval(at), a.eval(at) + b.eval(at)));
      EXPECT_TRUE(close((a * b).eval(at), a.eval(at) * b.eval(at)));
      if (!b.is_zero()) EXPECT_TRUE(close((a / b).eval(at), a.eval(at) / b.eval(at)));
    } catch (const NearPoleEvaluation&) {
    }
  }
}

TEST(RatFunc, SubstitutionAndRenaming) {
  const RatFunc r = P() / (P() + Q());
  EXPECT_EQ(r.renamed({{"p", "q"}, {"q", "p"}}), Q() / (P() + Q()));
  EXPECT_EQ(r.substitute("q", P()), C(mpq_class(1, 2)));
  Polynomial one = Polynomial::constant(1);
  EXPECT_EQ(r.translated({{"p", one}}), (P() + C(1)) / (P() + Q() + C(1)));
}

TEST(TruncLaurent, ExpTimesInverseExpIsOne) {
  const TruncLaurent e = TruncLaurent::exp_series(1, 4);
  const TruncLaurent f = TruncLaurent::exp_series(-1, 4);
  const TruncLaurent prod = e * f;
  EXPECT_EQ(prod, TruncLaurent::constant(1, 4));
  EXPECT_GE(prod.precision(), 5);
}

TEST(TruncLaurent, ExpCoefficients) {
  const TruncLaurent e = TruncLaurent::exp_series(2, 6);
  EXPECT_EQ(e.coeff(0), 1);
  EXPECT_EQ(e.coeff(1), 2);
  EXPECT_EQ(e.coeff(3), mpq_class(4, 3));
  EXPECT_EQ(e.coeff(6), mpq_class(4, 45));  // 2^6 / 6!
}

TEST(TruncLaurent, InverseOfSeriesWithPoleTerm) {
  // 1 - exp(-t) = t - t^2/2 + ..., so t/(1 - exp(-t)) = 1 + t/2 + t^2/12 + ...
  const TruncLaurent one = TruncLaurent::constant(1);
  const TruncLaurent g = TruncLaurent::monomial(1, 1) * (one - TruncLaurent::exp_series(-1)).inverse();
  EXPECT_EQ(g.coeff(0), 1);
  EXPECT_EQ(g.coeff(1), mpq_class(1, 2));
  EXPECT_EQ(g.coeff(2), mpq_class(1, 12));
  EXPECT_EQ(g.coeff(3), 0);
  EXPECT_EQ(g.coeff(4), mpq_class(-1, 720));
}

TEST(TruncLaurent, InverseProperty) {
  testgen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    std::vector<mpq_class> c;
    for (int k = 0; k < 6; ++k) {
      c.emplace_back(testgen::uniform(rng, -5, 5), testgen::uniform(rng, 1, 4));
      c.back().canonicalize();
    }
    if (c[0] == 0) c[0] = 1;
    const TruncLaurent s = TruncLaurent::from_coeffs(testgen::uniform(rng, -2, 2), c, TruncLaurent::kExact);
    EXPECT_EQ(s * s.inverse(), TruncLaurent::constant(1));
  }
}

TEST(TruncLaurent, ZeroHasNoInverse) {
  EXPECT_THROW(TruncLaurent::constant(0).inverse(), TruncationUnderflow);
  // Known only to t^3 and zero there: indistinguishable from 0.
  const TruncLaurent tiny = TruncLaurent::from_coeffs(0, {0, 0, 0}, 3);
  EXPECT_THROW(tiny.inverse(), TruncationUnderflow);
}

TEST(TruncLaurent, Printing) {
  EXPECT_EQ(TruncLaurent::exp_series(1, 3).to_string(), "1 + t + 1/2*t^2 + 1/6*t^3");
  EXPECT_EQ(TruncLaurent::monomial(-2, -1).to_string(), "-2*t^-1");
}

TEST(Real, ArithmeticAndZeroDivision) {
  const Real a(2.0L);
  EXPECT_EQ((a * a.inverse()).value(), 1.0L);
  EXPECT_THROW(Real(0.0L).inverse(), DivisionByZero);
  EXPECT_EQ(a.constant_like(mpq_class(1, 4)).value(), 0.25L);
}

TEST(MCoefficient, PsiIsTwoMinusPhi) {
  EXPECT_EQ(MCoefficient::symbol("psi") + MCoefficient::symbol("phi"), MCoefficient::constant(2));
}

TEST(MCoefficient, ShiftsActOnSymbolsAndExponentials) {
  const MCoefficient x = MCoefficient::symbol("x");
  const MCoefficient phi = MCoefficient::symbol("phi");
  const MCoefficient psi = MCoefficient::symbol("psi");
  EXPECT_EQ(x.shift_mu(), x + phi);
  EXPECT_EQ(x.shift_nu(), x + psi);
  EXPECT_EQ(MCoefficient::symbol("y").shift_mu_inverse(), MCoefficient::symbol("y") - phi);
  const MCoefficient e1 = MCoefficient::symbol("E1");
  EXPECT_EQ(e1.shift_mu(), e1 * MCoefficient::symbol("q"));
  EXPECT_EQ(MCoefficient::symbol("E2").shift_nu(), MCoefficient::symbol("E2") * MCoefficient::symbol("p"));
  EXPECT_EQ((e1 * e1).inverse().shift_nu_inverse(), (e1 * e1).inverse() * MCoefficient::symbol("p").pow(2));
}

TEST(MCoefficient, ShiftsAreRingAutomorphisms) {
  testgen::Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const MCoefficient a = testgen::m_coefficient(rng) + testgen::m_coefficient(rng);
    const MCoefficient b = testgen::m_coefficient(rng);
    EXPECT_EQ((a * b).shift_mu(), a.shift_mu() * b.shift_mu());
    EXPECT_EQ((a + b).shift_nu_inverse(), a.shift_nu_inverse() + b.shift_nu_inverse());
    EXPECT_EQ(a.shift_mu().shift_mu_inverse(), a);
    EXPECT_EQ(a.shift_mu().shift_nu(), a.shift_nu().shift_mu());
  }
}

TEST(MCoefficient, TauIsAnInvolutionAndSwapsShifts) {
  testgen::Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const MCoefficient a = testgen::m_coefficient(rng) + testgen::m_coefficient(rng);
    EXPECT_EQ(a.tau().tau(), a);
    EXPECT_EQ(a.shift_mu().tau(), a.tau().shift_nu());
  }
  EXPECT_EQ(MCoefficient::symbol("phi").tau(), MCoefficient::symbol("psi"));
  EXPECT_EQ(MCoefficient::symbol("E1").tau(), MCoefficient::symbol("E2"));
}

TEST(MCoefficient, OnlySingleTermsAreUnits) {
  const MCoefficient e = MCoefficient::symbol("E1") * MCoefficient::symbol("x");
  EXPECT_TRUE((e * e.inverse()).is_one());
  EXPECT_THROW((MCoefficient::symbol("E1") + MCoefficient::symbol("E2")).inverse(), NotAUnit);
  EXPECT_THROW(MCoefficient().inverse(), NotAUnit);
}

TEST(MCoefficient, EvaluationAndPrinting) {
  const MCoefficient c = MCoefficient::symbol("x") * MCoefficient::symbol("E1") - MCoefficient::symbol("E2").inverse();
  const std::map<std::string, double> at{{"p", 1}, {"q", 1}, {"phi", 1}, {"x", 3}, {"y", 0}, {"E1", 2}, {"E2", 4}};
  EXPECT_DOUBLE_EQ(c.eval(at), 3.0 * 2.0 - 0.25);
  EXPECT_EQ(c.to_string(), "x*E1 - E2^-1");
}
