#pragma once

#include <array>
#include <string>

#include "glpq/nc/element.hpp"

namespace glpq {

/// 2x2 matrix with even diagonal and odd off-diagonal entries.
template <Scalar S>
class SuperMatrix {
 public:
  using E = Element<S>;

  SuperMatrix(E a11, E a12, E a21, E a22) : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
    check(e_[0], true, "top-left");
    check(e_[1], false, "top-right");
    check(e_[2], false, "bottom-left");
    check(e_[3], true, "bottom-right");
  }

  static SuperMatrix identity(const typename E::PresPtr& p) {
    return SuperMatrix(E::one(p), E(p), E(p), E::one(p));
  }
  static SuperMatrix zero(const typename E::PresPtr& p) { return SuperMatrix(E(p), E(p), E(p), E(p)); }

  const E& a11() const { return e_[0]; }
  const E& a12() const { return e_[1]; }
  const E& a21() const { return e_[2]; }
  const E& a22() const { return e_[3]; }
  const E& operator()(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }

  SuperMatrix operator*(const SuperMatrix& o) const {
    return SuperMatrix(a11() * o.a11() + a12() * o.a21(), a11() * o.a12() + a12() * o.a22(),
                       a21() * o.a11() + a22() * o.a21(), a21() * o.a12() + a22() * o.a22());
  }
  SuperMatrix operator+(const SuperMatrix& o) const {
    return SuperMatrix(a11() + o.a11(), a12() + o.a12(), a21() + o.a21(), a22() + o.a22());
  }
  SuperMatrix operator-(const SuperMatrix& o) const {
    return SuperMatrix(a11() - o.a11(), a12() - o.a12(), a21() - o.a21(), a22() - o.a22());
  }
  /// Scalar applied on the left of every entry.
  SuperMatrix scaled(const S& c) const {
    return SuperMatrix(a11().scaled(c), a12().scaled(c), a21().scaled(c), a22().scaled(c));
  }
  bool operator==(const SuperMatrix& o) const { return e_ == o.e_; }

  std::string to_string() const {
    return "[[" + a11().to_string() + ", " + a12().to_string() + "], [" + a21().to_string() + ", " +
           a22().to_string() + "]]";
  }

 private:
  static void check(const E& e, bool even, const char* where) {
    const Parity p = e.parity();
    if (p == Parity::Zero) return;
    if (p != (even ? Parity::Even : Parity::Odd)) {
      throw ParityError(std::string(where) + " entry must be " + (even ? "even" : "odd"));
    }
  }

  std::array<E, 4> e_;
};

}  // namespace glpq
