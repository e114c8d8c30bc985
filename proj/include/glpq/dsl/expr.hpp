#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "glpq/coeff/errors.hpp"

namespace glpq {

enum class DslContext { TSide, MSide, Series };

/// "tside", "mside" or "series"; throws std::invalid_argument otherwise.
DslContext parse_context(const std::string& name);
std::string context_name(DslContext c);
/// Identifiers accepted in the context.
const std::vector<std::string>& context_identifiers(DslContext c);

class SyntaxError : public AlgebraError {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public AlgebraError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t position)
      : AlgebraError("unknown identifier '" + name + "' at position " + std::to_string(position)) {}
};

/// Parsed expression. Numbers are nonnegative; signs live on the terms of a
/// Sum, and a leading minus gives a Sum with a single negated term.
struct Expr {
  enum class Kind { Sum, Product, Power, Bracket, Symbol, Number };
  Kind kind = Kind::Number;
  std::vector<Expr> children;  // Sum terms, Product factors, Power base, Bracket pair
  std::vector<bool> negated;   // Sum only, one flag per term
  int exponent = 0;            // Power only
  std::string name;            // Symbol only
  mpq_class value;             // Number only

  bool operator==(const Expr& o) const;
};

/// expr := ['-'] term (('+'|'-') term)*, term := factor ('*' factor)*,
/// factor := atom ('^' ['-'|'+'] int)?, atom := ident | int ['/' int] |
/// '(' expr ')' | '[' expr ',' expr ']'.
Expr parse(const std::string& text, DslContext ctx);

/// Prints with just enough parentheses that parse(print(e)) == e.
std::string print(const Expr& e);

}  // namespace glpq
