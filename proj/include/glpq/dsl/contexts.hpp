#pragma once

#include <functional>
#include <string>

#include "glpq/dsl/expr.hpp"
#include "glpq/nc/element.hpp"
#include "glpq/series/series.hpp"

namespace glpq {

/// Evaluates a tree in a presentation; `lookup` resolves identifiers to
/// Elements. Negative powers go through invert_even_unit (NotAUnit for odd
/// or non-unit bases).
template <Scalar S>
Element<S> evaluate(const Expr& e, const typename Element<S>::PresPtr& pres,
                    const std::function<Element<S>(const std::string&)>& lookup) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Element<S>::scalar(pres, pres->one().constant_like(e.value));
    case Expr::Kind::Symbol:
      return lookup(e.name);
    case Expr::Kind::Bracket:
      return commutator(evaluate<S>(e.children[0], pres, lookup), evaluate<S>(e.children[1], pres, lookup));
    case Expr::Kind::Power:
      return evaluate<S>(e.children[0], pres, lookup).pow(e.exponent);
    case Expr::Kind::Product: {
      Element<S> r = Element<S>::one(pres);
      for (const Expr& f : e.children) r = r * evaluate<S>(f, pres, lookup);
      return r;
    }
    case Expr::Kind::Sum: {
      Element<S> r(pres);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Element<S> t = evaluate<S>(e.children[i], pres, lookup);
        r = e.negated[i] ? r - t : r + t;
      }
      return r;
    }
  }
  return Element<S>(pres);
}

/// Series context settings; the defaults match the series suite.
struct SeriesContextOptions {
  SeriesConfig config;
};

/// Parses `text` in the context, evaluates it exactly and prints the
/// canonical form.
std::string normalize(const std::string& text, DslContext ctx, const SeriesContextOptions& series = {});

}  // namespace glpq
