#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glpq/coeff/symbol_set.hpp"

namespace glpq {

/// Exponent vector of a commutative monomial; slot i belongs to symbol i.
struct Exponents {
  std::array<std::uint16_t, kMaxSymbols> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool divides(const Exponents& other) const {
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (e[i] > other.e[i]) return false;
    }
    return true;
  }
  bool operator==(const Exponents&) const = default;
};

/// Graded lexicographic comparison: total degree first, then earlier symbols
/// dominate. Returns negative, zero or positive.
int compare_grlex(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept strictly decreasing in graded lex order with
/// nonzero coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  struct Term {
    Exponents exps;
    mpz_class coeff;
  };

  Polynomial() = default;
  static Polynomial constant(const mpz_class& c);
  static Polynomial variable(std::size_t index, unsigned power = 1);
  static Polynomial monomial(const Exponents& exps, const mpz_class& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.degree() == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }
  const Term& leading() const { return terms_.front(); }

  /// Positive gcd of the coefficients; zero for the zero polynomial.
  mpz_class content() const;
  /// Componentwise minimum exponent over all terms.
  Exponents min_exponents() const;
  int degree_in(std::size_t var) const;
  int total_degree() const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  /// Coefficients with respect to `var`; entry k multiplies var^k and no
  /// longer contains var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const mpz_class& c) const;
  Polynomial times_monomial(const Exponents& m) const;
  /// Exact division by a monomial; every term must be divisible.
  Polynomial divided_by_monomial(const Exponents& m) const;
  /// Exact division by an integer; every coefficient must be divisible.
  Polynomial divided_by_integer(const mpz_class& c) const;
  /// Exact multivariate division; nullopt when `d` does not divide.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  Polynomial pow(unsigned n) const;

  /// Replace symbol `var` by `value`.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  /// Rename symbol i to perm[i]; perm must be a permutation of the used slots.
  Polynomial permuted(const std::array<std::size_t, kMaxSymbols>& perm) const;

  double eval(std::span<const double> values) const;

  bool operator==(const Polynomial& o) const;

  std::string to_string(const SymbolSet& symbols) const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

/// Greatest common divisor with positive leading coefficient (content
/// included). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Formats c*m with the symbol names, using `^-k` for negative exponents.
std::string format_monomial(std::span<const int> exps, const SymbolSet& symbols);

}  // namespace glpq
