#include "glpq/dsl/expr.hpp"

namespace glpq {

namespace {

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.value.get_str();
    case Expr::Kind::Symbol:
      return e.name;
    case Expr::Kind::Bracket:
      return "[" + print(e.children[0]) + ", " + print(e.children[1]) + "]";
    case Expr::Kind::Power: {
      const Expr& b = e.children[0];
      const bool atomic =
          b.kind == Expr::Kind::Symbol || b.kind == Expr::Kind::Bracket || b.kind == Expr::Kind::Number;
      return (atomic ? print(b) : wrap(print(b))) + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::Product: {
      std::string s;
      for (const Expr& f : e.children) {
        if (!s.empty()) s += '*';
        const bool nested = f.kind == Expr::Kind::Sum || f.kind == Expr::Kind::Product;
        s += nested ? wrap(print(f)) : print(f);
      }
      return s;
    }
    case Expr::Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& t = e.children[i];
        const std::string body = t.kind == Expr::Kind::Sum ? wrap(print(t)) : print(t);
        if (i == 0) {
          s = e.negated[i] ? "-" + body : body;
        } else {
          s += (e.negated[i] ? " - " : " + ") + body;
        }
      }
      return s;
    }
  }
  return "";
}

}  // namespace glpq
