#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "glpq/dsl/expr.hpp"

namespace glpq {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

struct Token {
  enum class Kind { Ident, Number, Op, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isalpha(ch) || ch == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Kind::Ident, s.substr(start, i - start), start});
    } else if (std::isdigit(ch)) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Token::Kind::Number, s.substr(start, i - start), start});
    } else if (std::string("+-*^()[],").find(static_cast<char>(ch)) != std::string::npos) {
      out.push_back({Token::Kind::Op, std::string(1, static_cast<char>(ch)), i});
      ++i;
    } else {
      throw SyntaxError(i, {"identifier", "number", "operator"}, std::string(1, static_cast<char>(ch)));
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, DslContext ctx) : toks_(lex(text)), ids_(context_identifiers(ctx)) {}

  Expr run() {
    Expr e = expr();
    if (peek().kind != Token::Kind::End) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool at_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw SyntaxError(t.pos, std::move(expected), t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'");
  }
  void expect(const char* op) {
    if (!at_op(op)) fail({std::string("'") + op + "'"});
    ++i_;
  }

  Expr expr() {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    bool neg = false;
    if (at_op("-")) {
      neg = true;
      ++i_;
    }
    sum.children.push_back(term());
    sum.negated.push_back(neg);
    while (at_op("+") || at_op("-")) {
      const bool minus = at_op("-");
      ++i_;
      sum.children.push_back(term());
      sum.negated.push_back(minus);
    }
    if (sum.children.size() == 1 && !sum.negated[0]) return std::move(sum.children[0]);
    return sum;
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Kind::Product;
    prod.children.push_back(factor());
    while (at_op("*")) {
      ++i_;
      prod.children.push_back(factor());
    }
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  Expr factor() {
    Expr base = atom();
    if (!at_op("^")) return base;
    ++i_;
    int sign = 1;
    if (at_op("-") || at_op("+")) {
      sign = at_op("-") ? -1 : 1;
      ++i_;
    }
    if (peek().kind != Token::Kind::Number || peek().text.find('/') != std::string::npos) fail({"integer exponent"});
    int e = 0;
    try {
      e = std::stoi(peek().text);
    } catch (const std::out_of_range&) {
      fail({"exponent within int range"});
    }
    ++i_;
    Expr p;
    p.kind = Expr::Kind::Power;
    p.exponent = sign * e;
    p.children.push_back(std::move(base));
    return p;
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident) {
      if (std::find(ids_.begin(), ids_.end(), t.text) == ids_.end()) throw UnknownIdentifier(t.text, t.pos);
      Expr s;
      s.kind = Expr::Kind::Symbol;
      s.name = t.text;
      ++i_;
      return s;
    }
    if (t.kind == Token::Kind::Number) {
      Expr n;
      n.kind = Expr::Kind::Number;
      n.value = mpq_class(t.text);
      if (n.value.get_den() == 0) fail({"nonzero denominator"});
      n.value.canonicalize();
      ++i_;
      return n;
    }
    if (at_op("(")) {
      ++i_;
      Expr e = expr();
      expect(")");
      return e;
    }
    if (at_op("[")) {
      ++i_;
      Expr b;
      b.kind = Expr::Kind::Bracket;
      b.children.push_back(expr());
      expect(",");
      b.children.push_back(expr());
      expect("]");
      return b;
    }
    fail({"identifier", "number", "'('", "'['"});
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& ids_;
  std::size_t i_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : AlgebraError("syntax error at position " + std::to_string(position) + ": expected " + join(expected) +
                   ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

DslContext parse_context(const std::string& name) {
  if (name == "tside") return DslContext::TSide;
  if (name == "mside") return DslContext::MSide;
  if (name == "series") return DslContext::Series;
  throw std::invalid_argument("unknown context '" + name + "' (expected tside, mside or series)");
}

std::string context_name(DslContext c) {
  switch (c) {
    case DslContext::TSide:
      return "tside";
    case DslContext::MSide:
      return "mside";
    case DslContext::Series:
      return "series";
  }
  return "";
}

const std::vector<std::string>& context_identifiers(DslContext c) {
  static const std::vector<std::string> tside = {"a", "d", "beta", "gamma", "p", "q"};
  static const std::vector<std::string> mside = {"x", "y", "mu", "nu", "phi", "psi", "E1", "E2", "p", "q"};
  static const std::vector<std::string> series = {"A", "D", "a", "d", "beta", "gamma", "p", "q", "t"};
  switch (c) {
    case DslContext::TSide:
      return tside;
    case DslContext::MSide:
      return mside;
    case DslContext::Series:
      return series;
  }
  return tside;
}

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && children == o.children && negated == o.negated && exponent == o.exponent &&
         name == o.name && value == o.value;
}

Expr parse(const std::string& text, DslContext ctx) { return Parser(text, ctx).run(); }

}  // namespace glpq
