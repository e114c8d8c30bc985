#include <gtest/gtest.h>

#include "glpq/tside/algebra.hpp"
#include "glpq/tside/suites.hpp"

using namespace glpq;

namespace {

struct Fixture {
  TSide<RatFunc> t = make_exact_tside();
  RatFunc p = t.p();
  RatFunc q = t.q();
  RatFunc c(long v) const { return t.c(v); }
  Element<RatFunc> w(const std::vector<std::pair<std::string, int>>& word, const RatFunc& k) const {
    return t.word(word, k);
  }
};

// T^n by repeated multiplication of the four blocks written out by hand.
std::array<Element<RatFunc>, 4> naive_power(const TSide<RatFunc>& t, int n) {
  std::array<Element<RatFunc>, 4> r{t.unit(), t.zero(), t.zero(), t.unit()};
  for (int k = 0; k < n; ++k) {
    r = {r[0] * t.a() + r[1] * t.gamma(), r[0] * t.beta() + r[1] * t.d(), r[2] * t.a() + r[3] * t.gamma(),
         r[2] * t.beta() + r[3] * t.d()};
  }
  return r;
}

}  // namespace

TEST(TSide, RelationsHoldForT) {
  Fixture f;
  for (const auto& [name, diff] : f.t.gl_relations(f.t.T(), f.p, f.q)) EXPECT_TRUE(diff.is_zero()) << name;
}

TEST(TSide, RelationsDetectWrongParameters) {
  Fixture f;
  int nonzero = 0;
  for (const auto& [name, diff] : f.t.gl_relations(f.t.T(), f.q, f.p)) nonzero += diff.is_zero() ? 0 : 1;
  EXPECT_GT(nonzero, 0);
}

TEST(TSide, SuperdeterminantOfT) {
  Fixture f;
  // (a - beta d^-1 gamma) d^-1 with beta d^-1 gamma d^-1 = p q^2 d^-2 beta gamma.
  const auto expected = f.w({{"a", 1}, {"d", -1}}, f.c(1)) - f.w({{"d", -2}, {"beta", 1}, {"gamma", 1}}, f.p * f.q * f.q);
  EXPECT_EQ(f.t.sdet(f.t.T()), expected);
  EXPECT_EQ(f.t.sdet_via_upper(f.t.T()), expected);
  EXPECT_EQ(f.t.sdet(f.t.T()).to_string(), "a*d^-1 - p*q^2*d^-2*beta*gamma");
}

TEST(TSide, SquareBlocks) {
  Fixture f;
  const auto b = f.t.closed_power_blocks(2);
  EXPECT_EQ(b.A, f.t.a() * f.t.a() + f.t.beta() * f.t.gamma());
  EXPECT_EQ(b.B, f.t.a() * f.t.beta() + f.t.beta() * f.t.d());
  EXPECT_EQ(b.C, f.t.gamma() * f.t.a() + f.t.d() * f.t.gamma());
  EXPECT_EQ(b.D, f.t.gamma() * f.t.beta() + f.t.d() * f.t.d());
}

TEST(TSide, ClosedPowersMatchRepeatedProducts) {
  Fixture f;
  for (int n = 1; n <= 5; ++n) {
    const auto b = f.t.closed_power_blocks(n);
    const auto r = naive_power(f.t, n);
    EXPECT_EQ(b.A, r[0]) << n;
    EXPECT_EQ(b.B, r[1]) << n;
    EXPECT_EQ(b.C, r[2]) << n;
    EXPECT_EQ(b.D, r[3]) << n;
  }
  EXPECT_THROW(f.t.closed_power_blocks(0), UnsupportedNegativeN);
}

TEST(TSide, BracketValues) {
  Fixture f;
  EXPECT_TRUE(f.t.bracket(0).is_zero());
  EXPECT_TRUE(f.t.bracket(1).is_one());
  EXPECT_EQ(f.t.bracket(2).to_string(), "1 + p^-1*q^-1");
  const RatFunc u = (f.p * f.q).inverse();
  EXPECT_EQ(f.t.bracket(3), f.c(1) + u + u * u);
}

TEST(TSide, CroutFactorization) {
  Fixture f;
  const auto lu = f.t.crout(f.t.T());
  EXPECT_EQ(lu.lower * lu.upper, f.t.T());
  EXPECT_TRUE(lu.upper.a21().is_zero());
  EXPECT_TRUE(lu.lower.a12().is_zero());
}

TEST(TSide, SuperInverse) {
  Fixture f;
  const auto inv = f.t.sinverse();
  EXPECT_EQ(inv * f.t.T(), f.t.identity());
  EXPECT_EQ(f.t.T() * inv, f.t.identity());
  EXPECT_EQ(f.t.block_inverse(f.t.T()), inv);
}

TEST(TSide, SdetPowerClosedForm) {
  Fixture f;
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(f.t.sdet(f.t.power(f.t.T(), n)), f.t.sdet_power_closed(n)) << n;
}

TEST(TSide, FloatingInstanceAgreesWithExactEvaluation) {
  const auto r = make_real_tside(2.0, 3.0);
  const auto s = r.sdet(r.T());
  // -p q^2 at p = 2, q = 3.
  Monomial m;
  m.even[1] = -2;
  m.odd = 0b11;
  EXPECT_DOUBLE_EQ(s.coefficient(m).value(), -18.0);
}

TEST(TSide, PoleGuard) {
  EXPECT_TRUE(pq_pole_guard(1.0, 1.0).has_value());
  EXPECT_TRUE(pq_pole_guard(-2.0, 0.5).has_value());
  EXPECT_FALSE(pq_pole_guard(2.0, 3.0).has_value());
}

TEST(TSide, SmallSuitesPass) {
  Section2Params small;
  small.n_lo = -2;
  small.n_hi = 2;
  small.m_lo = -1;
  small.m_hi = 1;
  EXPECT_TRUE(verify_section2(small, ExecMode::Serial).all_passed());
  EXPECT_TRUE(verify_section3(3, ExecMode::Serial).all_passed());
  EXPECT_TRUE(verify_appendix(2, ExecMode::Serial).all_passed());
}
