#include "glpq/dsl/contexts.hpp"

#include "glpq/mside/m_algebra.hpp"
#include "glpq/tside/algebra.hpp"

namespace glpq {

std::string normalize(const std::string& text, DslContext ctx, const SeriesContextOptions& series) {
  const Expr tree = parse(text, ctx);
  switch (ctx) {
    case DslContext::TSide: {
      const TSide<RatFunc> t = make_exact_tside();
      const auto lookup = [&t](const std::string& n) -> Element<RatFunc> {
        if (n == "p") return t.scalar(t.p());
        if (n == "q") return t.scalar(t.q());
        return Element<RatFunc>::generator(t.presentation(), n);
      };
      return evaluate<RatFunc>(tree, t.presentation(), lookup).to_string();
    }
    case DslContext::MSide: {
      const MSide m;
      const auto lookup = [&m](const std::string& n) -> MElement {
        if (n == "mu") return m.mu();
        if (n == "nu") return m.nu();
        return m.sym(n);
      };
      return evaluate<MCoefficient>(tree, m.presentation(), lookup).to_string();
    }
    case DslContext::Series: {
      const SeriesAlgebra s(series.config);
      const auto lookup = [&s](const std::string& n) -> SeriesElement {
        if (n == "A") return s.A();
        if (n == "D") return s.D();
        if (n == "a") return s.a();
        if (n == "d") return s.d();
        if (n == "beta") return s.beta();
        if (n == "gamma") return s.gamma();
        if (n == "p") return s.scalar(s.p());
        if (n == "q") return s.scalar(s.q());
        return s.scalar(TruncLaurent::monomial(1, 1, s.config().K));
      };
      return evaluate<TruncLaurent>(tree, s.presentation(), lookup).to_string();
    }
  }
  return "";
}

}  // namespace glpq
