#include <gtest/gtest.h>

#include "glpq/coeff/errors.hpp"
#include "glpq/mside/m_algebra.hpp"
#include "glpq/nc/builder.hpp"
#include "glpq/nc/rewrite.hpp"
#include "glpq/tside/algebra.hpp"

using namespace glpq;

namespace {

struct Fixture {
  TSide<RatFunc> t = make_exact_tside();
  using E = Element<RatFunc>;
  RatFunc p() const { return t.p(); }
  RatFunc q() const { return t.q(); }
  E s(const RatFunc& c) const { return t.scalar(c); }
  E w(const std::vector<std::pair<std::string, int>>& word) const { return t.word(word, t.one()); }
};

}  // namespace

TEST(Engine, NormalOrderOfDA) {
  Fixture f;
  // da = ad - (p - q^-1) gamma beta and gamma beta = -q p^-1 beta gamma.
  const auto expected = f.w({{"a", 1}, {"d", 1}}) + f.w({{"beta", 1}, {"gamma", 1}}).scaled(f.q() - f.p().inverse());
  EXPECT_EQ(f.t.d() * f.t.a(), expected);
  EXPECT_EQ((f.t.d() * f.t.a()).to_string(), "a*d + (q - p^-1)*beta*gamma");
}

TEST(Engine, TwistRules) {
  Fixture f;
  EXPECT_EQ(f.t.beta() * f.t.a(), f.w({{"a", 1}, {"beta", 1}}).scaled(f.q().inverse()));
  EXPECT_EQ(f.t.gamma() * f.t.d(), f.w({{"d", 1}, {"gamma", 1}}).scaled(f.p().inverse()));
  EXPECT_TRUE((f.t.beta() * f.t.beta()).is_zero());
  EXPECT_TRUE((f.t.gamma() * f.t.gamma()).is_zero());
}

TEST(Engine, DerivedInverseRules) {
  Fixture f;
  // beta d^-1 = q d^-1 beta follows from beta d = q^-1 d beta.
  EXPECT_EQ(f.t.beta() * f.t.d_inv(), f.w({{"d", -1}, {"beta", 1}}).scaled(f.q()));
  // Worked by hand: beta d^-1 gamma d^-1 = q d^-1 beta gamma d^-1 = q * p * q d^-2 beta gamma.
  const auto lhs = f.t.beta() * f.t.d_inv() * f.t.gamma() * f.t.d_inv();
  EXPECT_EQ(lhs, f.w({{"d", -2}, {"beta", 1}, {"gamma", 1}}).scaled(f.p() * f.q() * f.q()));
  // a^-1 d is not a twist: it carries the odd-pair correction.
  EXPECT_EQ(f.t.a_inv() * f.t.a(), f.t.unit());
  EXPECT_EQ(f.t.d() * f.t.d_inv(), f.t.unit());
}

TEST(Engine, ExpandedProductMatchesWordOracle) {
  Fixture f;
  // (a + beta)(a - beta) = a^2 - a beta + beta a - beta^2, each word normalized on its own.
  const auto lhs = (f.t.a() + f.t.beta()) * (f.t.a() - f.t.beta());
  const auto oracle = f.w({{"a", 2}}) - f.w({{"a", 1}, {"beta", 1}}) + f.w({{"beta", 1}, {"a", 1}}) -
                      f.w({{"beta", 1}, {"beta", 1}});
  EXPECT_EQ(lhs, oracle);
  EXPECT_EQ(lhs, f.w({{"a", 2}}) + f.w({{"a", 1}, {"beta", 1}}).scaled(f.q().inverse() - f.t.one()));
}

TEST(Engine, UnitAndNilpotentProducts) {
  Fixture f;
  const auto x = f.t.a() * f.t.gamma() + f.t.d();
  EXPECT_EQ(x * f.t.unit(), x);
  EXPECT_TRUE(((f.t.beta() * f.t.gamma()) * (f.t.gamma() * f.t.beta())).is_zero());
}

TEST(Engine, EvenUnitInverse) {
  Fixture f;
  EXPECT_EQ(invert_even_unit(f.t.a()), f.t.a_inv());
  const auto d2 = f.t.delta2();
  const auto inv = invert_even_unit(d2);
  EXPECT_EQ(d2 * inv, f.t.unit());
  EXPECT_EQ(inv * d2, f.t.unit());
  EXPECT_THROW(invert_even_unit(f.t.beta()), NotAUnit);
  EXPECT_THROW(invert_even_unit(f.t.a() + f.t.d()), NotAUnit);
  EXPECT_THROW(invert_even_unit(f.t.zero()), NotAUnit);
}

TEST(Engine, Commutators) {
  Fixture f;
  EXPECT_EQ(commutator(f.t.a(), f.t.d()), (f.t.gamma() * f.t.beta()).scaled(f.p() - f.q().inverse()));
  EXPECT_EQ(commutator(f.t.a(), f.t.d()).to_string(), "(-q + p^-1)*beta*gamma");
  MSide m;
  EXPECT_TRUE(commutator(m.x(), m.y()).is_zero());
  EXPECT_TRUE(anticommutator(m.mu(), m.nu()).is_zero());
}

TEST(Engine, Errors) {
  Fixture f;
  EXPECT_THROW(Element<RatFunc>::generator(f.t.presentation(), "z"), UnknownGenerator);
  EXPECT_THROW(Element<RatFunc>::generator(f.t.presentation(), "beta", -1), NonInvertibleNegativePower);
  const auto other = make_exact_tside();
  EXPECT_THROW(f.t.a() * other.a(), PresentationMismatch);
}

TEST(Engine, NonInvertibleNegativePower) {
  PresentationBuilder<RatFunc> b(RatFunc::constant(SymbolSet::make({"p"}), 1), "poly");
  b.even("u", false).even("v", true);
  b.relation("v", "u", RatFunc::symbol(SymbolSet::make({"p"}), "p"));
  const auto pres = b.build();
  EXPECT_THROW(pres->normalize({{0, -1}}, pres->one()), NonInvertibleNegativePower);
  EXPECT_NO_THROW(pres->normalize({{1, -2}, {0, 3}}, pres->one()));
}

TEST(Engine, ParityOfElements) {
  Fixture f;
  EXPECT_EQ(f.t.a().parity(), Parity::Even);
  EXPECT_EQ(f.t.beta().parity(), Parity::Odd);
  EXPECT_EQ((f.t.beta() * f.t.gamma()).parity(), Parity::Even);
  EXPECT_EQ((f.t.a() + f.t.beta()).parity(), Parity::Mixed);
  EXPECT_EQ(f.t.zero().parity(), Parity::Zero);
}

TEST(Engine, RewriterAgreesOnKnownWord) {
  Fixture f;
  const auto& p = *f.t.presentation();
  const std::vector<Letter> word = {{1, 1}, {0, 1}, {3, 1}, {1, -1}, {2, 1}};
  const auto left = rewrite_normalize(p, word, f.t.one(), Strategy::Leftmost);
  const auto right = rewrite_normalize(p, word, f.t.one(), Strategy::Rightmost);
  const auto kernel = f.t.d() * f.t.a() * f.t.gamma() * f.t.d_inv() * f.t.beta();
  EXPECT_EQ(left, kernel.terms());
  EXPECT_EQ(right, kernel.terms());
}

TEST(SuperMatrix, ParityLayoutIsEnforced) {
  Fixture f;
  using M = SuperMatrix<RatFunc>;
  EXPECT_THROW(M(f.t.beta(), f.t.beta(), f.t.gamma(), f.t.d()), ParityError);
  EXPECT_THROW(M(f.t.a(), f.t.a(), f.t.gamma(), f.t.d()), ParityError);
  EXPECT_NO_THROW(M(f.t.a(), f.t.zero(), f.t.gamma(), f.t.d()));
}

TEST(MSideEngine, ShiftsAcrossOddGenerators) {
  MSide m;
  // x mu = mu (x + phi): stored with the coefficient on the left, mu x = (x - phi) mu.
  EXPECT_EQ(m.mu() * m.x(), (m.x() - m.sym("phi")) * m.mu());
  EXPECT_EQ(m.nu() * m.y(), (m.y() - m.sym("psi")) * m.nu());
  EXPECT_EQ(m.mu() * m.sym("E1"), m.sym("E1") * m.scalar(MCoefficient::symbol("q").inverse()) * m.mu());
  EXPECT_EQ(m.nu() * m.mu(), -(m.mu() * m.nu()));
  EXPECT_TRUE((m.mu() * m.mu()).is_zero());
}
