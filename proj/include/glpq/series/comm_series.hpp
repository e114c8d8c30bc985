#pragma once

#include <map>
#include <utility>
#include <vector>

#include "glpq/coeff/trunc_laurent.hpp"

namespace glpq {

/// Weight filter shared by every truncated object of the series sector: a
/// term c*X with X of adic degree `degree` has weight degree + val(c).
/// Returns false when the term lies beyond `max_weight`; otherwise caps c to
/// the precision that matters (t^(max_weight - degree) and below) and throws
/// TruncationUnderflow if c is not known that far.
bool weight_filter(int degree, TruncLaurent& c, int max_weight);

/// Weight of c*X; saturates for exact zeros.
int term_weight(int degree, const TruncLaurent& c);

/// Commutative power series in A and D with Laurent coefficients in t,
/// truncated at weight i + j + val <= max_weight. Carrier for the scalar
/// functions of a and d that only ever meet odd pairs, where a and d
/// commute.
class CommSeries2 {
 public:
  using Key = std::pair<int, int>;  // (power of A, power of D)

  explicit CommSeries2(int max_weight) : max_weight_(max_weight) {}

  static CommSeries2 constant(const TruncLaurent& c, int max_weight);
  static CommSeries2 var_A(int max_weight, int order = kDefaultLaurentOrder);
  static CommSeries2 var_D(int max_weight, int order = kDefaultLaurentOrder);

  int max_weight() const { return max_weight_; }
  const std::map<Key, TruncLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TruncLaurent coeff(int i, int j) const;
  /// Smallest weight of a stored term (max_weight + 1 for zero).
  int min_weight() const;

  CommSeries2 operator+(const CommSeries2& o) const;
  CommSeries2 operator-(const CommSeries2& o) const;
  CommSeries2 operator-() const;
  CommSeries2 operator*(const CommSeries2& o) const;
  CommSeries2 scaled(const TruncLaurent& c) const;
  CommSeries2 pow(unsigned n) const;
  bool operator==(const CommSeries2& o) const { return (*this - o).is_zero(); }

  /// Numeric value at A = a, D = d, t = t (spot checks only).
  long double eval(long double a, long double d, long double t) const;

 private:
  void add_term(Key k, TruncLaurent c);

  int max_weight_;
  std::map<Key, TruncLaurent> terms_;
};

/// Complete homogeneous sum h_m(X_1, ..., X_k).
CommSeries2 complete_homogeneous(const std::vector<CommSeries2>& nodes, int m);

/// Divided difference of ln at the points 1 + X_i, for nodes X_i of weight
/// at least 1: sum over n of (-1)^(n+1)/n * h_(n-k+1)(X_1, ..., X_k). With one
/// node this is ln(1 + X_1).
CommSeries2 log_divided_difference(const std::vector<CommSeries2>& nodes);

}  // namespace glpq
