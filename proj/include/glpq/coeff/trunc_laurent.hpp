#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <vector>

namespace glpq {

inline constexpr int kDefaultLaurentOrder = 12;

/// Laurent series in one parameter t with rational coefficients, known modulo
/// t^precision.
///
/// Besides the order cap K (nothing at or beyond t^(K+1) is ever stored) each
/// value tracks its absolute precision: products and inverses of inexact
/// values lose precision exactly as the series arithmetic dictates, so a
/// result never claims coefficients it cannot know. Exact values (finite
/// Laurent polynomials within the cap) report kExact.
class TruncLaurent {
 public:
  static constexpr int kExact = INT_MAX;

  TruncLaurent() = default;
  explicit TruncLaurent(int order) : order_(order) {}

  static TruncLaurent constant(const mpq_class& c, int order = kDefaultLaurentOrder);
  /// c * t^k, exact.
  static TruncLaurent monomial(const mpq_class& c, int k, int order = kDefaultLaurentOrder);
  /// exp(c*t) through t^order.
  static TruncLaurent exp_series(const mpq_class& c, int order = kDefaultLaurentOrder);
  static TruncLaurent from_coeffs(int start, std::vector<mpq_class> coeffs, int precision,
                                  int order = kDefaultLaurentOrder);

  int order() const { return order_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ == kExact; }
  /// Exponent of the lowest stored coefficient; precision() for a zero value.
  int valuation() const { return c_.empty() ? prec_ : start_; }
  /// Coefficient of t^k (zero outside the stored range).
  mpq_class coeff(int k) const;

  /// True when every known coefficient vanishes.
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return start_ == 0 && c_.size() == 1 && c_[0] == 1; }
  bool is_single_term() const { return c_.size() <= 1; }

  TruncLaurent operator+(const TruncLaurent& o) const;
  TruncLaurent operator-(const TruncLaurent& o) const;
  TruncLaurent operator*(const TruncLaurent& o) const;
  TruncLaurent operator/(const TruncLaurent& o) const { return *this * o.inverse(); }
  TruncLaurent operator-() const;
  TruncLaurent& operator+=(const TruncLaurent& o) { return *this = *this + o; }
  TruncLaurent& operator-=(const TruncLaurent& o) { return *this = *this - o; }
  TruncLaurent& operator*=(const TruncLaurent& o) { return *this = *this * o; }

  /// Throws TruncationUnderflow when no nonzero coefficient is known.
  TruncLaurent inverse() const;
  TruncLaurent pow(int n) const;
  TruncLaurent constant_like(const mpq_class& c) const { return constant(c, order_); }
  TruncLaurent scaled(const mpq_class& c) const;

  /// Forget everything at or beyond t^p.
  TruncLaurent with_precision_cap(int p) const;

  /// Equal up to the common known precision.
  bool operator==(const TruncLaurent& o) const { return (*this - o).is_zero(); }

  double eval(double t) const;
  /// Ascending powers, e.g. "2*t^-1 + 1 + 1/12*t".
  std::string to_string() const;

 private:
  void normalize();

  int order_ = kDefaultLaurentOrder;
  int start_ = 0;
  std::vector<mpq_class> c_;
  int prec_ = kExact;
};

}  // namespace glpq
