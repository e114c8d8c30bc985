#include <gtest/gtest.h>

#include "generators.hpp"
#include "glpq/dsl/contexts.hpp"
#include "glpq/dsl/expr.hpp"

using namespace glpq;

namespace {

Expr symbol(const std::string& s) {
  Expr e;
  e.kind = Expr::Kind::Symbol;
  e.name = s;
  return e;
}

Expr number(long num, long den = 1) {
  Expr e;
  e.kind = Expr::Kind::Number;
  e.value = mpq_class(num, den);
  e.value.canonicalize();
  return e;
}

// Random tree obeying the parser's shape rules: sums have two or more terms
// or a negated first term, products have two or more factors.
Expr random_tree(testgen::Rng& rng, int depth, const std::vector<std::string>& ids) {
  const int pick = depth <= 0 ? testgen::uniform(rng, 4, 5) : testgen::uniform(rng, 0, 5);
  Expr e;
  switch (pick) {
    case 0: {
      e.kind = Expr::Kind::Sum;
      const int n = testgen::uniform(rng, 1, 3);
      for (int i = 0; i < n; ++i) {
        e.children.push_back(random_tree(rng, depth - 1, ids));
        e.negated.push_back(testgen::uniform(rng, 0, 1) == 1);
      }
      if (n == 1) e.negated[0] = true;
      return e;
    }
    case 1: {
      e.kind = Expr::Kind::Product;
      const int n = testgen::uniform(rng, 2, 3);
      for (int i = 0; i < n; ++i) e.children.push_back(random_tree(rng, depth - 1, ids));
      return e;
    }
    case 2:
      e.kind = Expr::Kind::Power;
      e.children.push_back(random_tree(rng, depth - 1, ids));
      e.exponent = testgen::uniform(rng, -3, 3);
      return e;
    case 3:
      e.kind = Expr::Kind::Bracket;
      e.children.push_back(random_tree(rng, depth - 1, ids));
      e.children.push_back(random_tree(rng, depth - 1, ids));
      return e;
    case 4:
      return symbol(ids[static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(ids.size()) - 1))]);
    default:
      return testgen::uniform(rng, 0, 2) == 0 ? number(testgen::uniform(rng, 1, 9), testgen::uniform(rng, 2, 5))
                                              : number(testgen::uniform(rng, 0, 12));
  }
}

std::size_t error_position(const std::string& text, DslContext ctx) {
  try {
    parse(text, ctx);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(Dsl, Contexts) {
  EXPECT_EQ(parse_context("tside"), DslContext::TSide);
  EXPECT_EQ(context_name(DslContext::Series), "series");
  EXPECT_THROW(parse_context("qside"), std::invalid_argument);
}

TEST(Dsl, ParsesProductsPowersAndBrackets) {
  const Expr e = parse("d*a", DslContext::TSide);
  ASSERT_EQ(e.kind, Expr::Kind::Product);
  EXPECT_EQ(e.children[0], symbol("d"));
  EXPECT_EQ(e.children[1], symbol("a"));

  const Expr pw = parse("a^-2", DslContext::TSide);
  ASSERT_EQ(pw.kind, Expr::Kind::Power);
  EXPECT_EQ(pw.exponent, -2);

  const Expr br = parse("[x, mu]", DslContext::MSide);
  ASSERT_EQ(br.kind, Expr::Kind::Bracket);
  EXPECT_EQ(br.children[1], symbol("mu"));

  const Expr half = parse("1/2", DslContext::TSide);
  EXPECT_EQ(half, number(1, 2));
  EXPECT_EQ(parse("4/8", DslContext::TSide), number(1, 2));
}

TEST(Dsl, SumsCarrySigns) {
  const Expr e = parse("-a + d - beta*gamma", DslContext::TSide);
  ASSERT_EQ(e.kind, Expr::Kind::Sum);
  EXPECT_EQ(e.negated, (std::vector<bool>{true, false, true}));
  const Expr neg = parse("-a", DslContext::TSide);
  ASSERT_EQ(neg.kind, Expr::Kind::Sum);
  EXPECT_EQ(neg.children.size(), 1U);
  EXPECT_EQ(parse("(a)", DslContext::TSide), symbol("a"));
}

TEST(Dsl, SyntaxErrorsReportPositions) {
  EXPECT_EQ(error_position("a +", DslContext::TSide), 3U);
  EXPECT_EQ(error_position("a * )", DslContext::TSide), 4U);
  EXPECT_EQ(error_position("[a d]", DslContext::TSide), 3U);
  EXPECT_EQ(error_position("a^b", DslContext::TSide), 2U);
  EXPECT_EQ(error_position("a + 2/0", DslContext::TSide), 4U);  // start of the number token
  EXPECT_EQ(error_position("a a", DslContext::TSide), 2U);
  EXPECT_THROW(parse("x", DslContext::TSide), UnknownIdentifier);
  EXPECT_THROW(parse("beta", DslContext::MSide), UnknownIdentifier);
  EXPECT_NO_THROW(parse("A*t", DslContext::Series));
}

TEST(Dsl, PrintThenParseRoundTrips) {
  testgen::Rng rng(41);
  for (const auto ctx : {DslContext::TSide, DslContext::MSide, DslContext::Series}) {
    const auto& ids = context_identifiers(ctx);
    for (int i = 0; i < 200; ++i) {
      const Expr e = random_tree(rng, 4, ids);
      const std::string text = print(e);
      ASSERT_EQ(parse(text, ctx), e) << text;
    }
  }
}

TEST(Dsl, NormalizeExamples) {
  EXPECT_EQ(normalize("d*a", DslContext::TSide), "a*d + (q - p^-1)*beta*gamma");
  EXPECT_EQ(normalize("[a,d]", DslContext::TSide), "(-q + p^-1)*beta*gamma");
  EXPECT_EQ(normalize("a^-1*a", DslContext::TSide), "1");
  EXPECT_EQ(normalize("beta*beta", DslContext::TSide), "0");
  EXPECT_EQ(normalize("[x,mu]", DslContext::MSide), "phi*mu");
  EXPECT_EQ(normalize("[x,y]", DslContext::MSide), "0");
  EXPECT_EQ(normalize("mu*nu + nu*mu", DslContext::MSide), "0");
  SeriesContextOptions o;
  o.config.N = 3;
  o.config.K = 7;
  // [a, d] = -(q - p^-1) beta gamma and q - p^-1 = 2t + O(t^3) on the ray (1, 1).
  EXPECT_EQ(normalize("[A,D]", DslContext::Series, o), "-2*t*beta*gamma");
  EXPECT_THROW(normalize("beta^-1", DslContext::TSide), AlgebraError);
}

TEST(Dsl, NormalFormsAreStable) {
  testgen::Rng rng(42);
  const std::vector<std::string> ids{"a", "d", "beta", "gamma", "p", "q"};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const std::string text = print(random_tree(rng, 3, ids));
    std::string once;
    try {
      once = normalize(text, DslContext::TSide);
    } catch (const AlgebraError&) {
      continue;  // e.g. a negative power of an odd element
    }
    ASSERT_EQ(normalize(once, DslContext::TSide), once) << text;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}
