#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "glpq/coeff/polynomial.hpp"
#include "glpq/coeff/symbol_set.hpp"

namespace glpq {

/// Reduced multivariate rational function over a SymbolSet.
///
/// Numerator and denominator are coprime integer polynomials and the
/// denominator has a positive leading coefficient, so two RatFuncs are equal
/// exactly when their representations are. A default-constructed RatFunc is
/// zero with no symbol set; it adopts the set of the other operand.
class RatFunc {
 public:
  RatFunc() : den_(Polynomial::constant(1)) {}
  explicit RatFunc(SymbolSetPtr symbols) : symbols_(std::move(symbols)), den_(Polynomial::constant(1)) {}

  static RatFunc constant(SymbolSetPtr symbols, const mpq_class& c);
  static RatFunc symbol(SymbolSetPtr symbols, const std::string& name);
  static RatFunc from_polynomials(SymbolSetPtr symbols, Polynomial num, Polynomial den);

  const SymbolSetPtr& symbols() const { return symbols_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Denominator is a single monomial, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }
  /// Prints as one signed product (no top-level sum).
  bool is_single_term() const { return num_.terms().size() <= 1 && den_.is_monomial(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const;
  RatFunc pow(int n) const;
  RatFunc constant_like(const mpq_class& c) const { return constant(symbols_, c); }

  bool operator==(const RatFunc& o) const;

  /// Floating evaluation; throws MissingSymbol for an unassigned symbol in
  /// use and NearPoleEvaluation when |denominator| <= eps.
  double eval(const std::map<std::string, double>& assignment, double eps = 1e-12) const;

  /// General substitution of one symbol by a rational function.
  RatFunc substitute(const std::string& name, const RatFunc& value) const;
  /// Substitutions var_i -> var_i + offset_i that form a ring automorphism
  /// (offsets must not mention the substituted symbols). Skips the gcd.
  RatFunc translated(const std::map<std::string, Polynomial>& offsets) const;
  /// Renames symbols according to `swap` (pairs are exchanged).
  RatFunc renamed(const std::map<std::string, std::string>& swap) const;

  std::string to_string() const;

 private:
  RatFunc(SymbolSetPtr symbols, Polynomial num, Polynomial den)
      : symbols_(std::move(symbols)), num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc reduce(SymbolSetPtr symbols, Polynomial num, Polynomial den);
  const SymbolSetPtr& common_symbols(const RatFunc& o) const;

  SymbolSetPtr symbols_;
  Polynomial num_;
  Polynomial den_;
};

}  // namespace glpq
