#pragma once

#include <gmpxx.h>

#include <cmath>
#include <sstream>
#include <string>

#include "glpq/coeff/errors.hpp"

namespace glpq {

/// Floating scalar used only by the numeric spot checks; it is never a
/// ground truth. Zero tests are exact so that the engine keeps every term a
/// computation produces. Extended precision: commutators of high powers
/// cancel summands far larger than the result.
class Real {
 public:
  Real() = default;
  Real(long double v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  long double value() const { return v_; }

  bool is_zero() const { return v_ == 0.0L; }
  bool is_one() const { return v_ == 1.0L; }
  bool is_single_term() const { return true; }

  Real operator+(const Real& o) const { return v_ + o.v_; }
  Real operator-(const Real& o) const { return v_ - o.v_; }
  Real operator*(const Real& o) const { return v_ * o.v_; }
  Real operator/(const Real& o) const { return *this * o.inverse(); }
  Real operator-() const { return -v_; }
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }

  Real inverse() const {
    if (v_ == 0.0L) throw DivisionByZero();
    return 1.0L / v_;
  }
  Real pow(int n) const { return std::pow(v_, n); }
  Real constant_like(const mpq_class& c) const {
    return static_cast<long double>(c.get_num().get_d()) / static_cast<long double>(c.get_den().get_d());
  }

  bool operator==(const Real& o) const { return v_ == o.v_; }

  std::string to_string() const {
    std::ostringstream os;
    os.precision(21);
    os << v_;
    return os.str();
  }

 private:
  long double v_ = 0.0L;
};

}  // namespace glpq
