#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glpq/nc/element.hpp"
#include "glpq/nc/supermatrix.hpp"

namespace glpq {

/// Differences that vanish iff the entries (A, B; C, D) of X satisfy the
/// two-parameter relations with parameters (P, Q).
template <Scalar S>
std::vector<std::pair<std::string, Element<S>>> gl_relation_differences(const SuperMatrix<S>& X, const S& P,
                                                                        const S& Q) {
  const Element<S>& A = X.a11();
  const Element<S>& B = X.a12();
  const Element<S>& C = X.a21();
  const Element<S>& D = X.a22();
  return {
      {"AB=QBA", A * B - (B * A).scaled(Q)},
      {"DB=QBD", D * B - (B * D).scaled(Q)},
      {"AC=PCA", A * C - (C * A).scaled(P)},
      {"DC=PCD", D * C - (C * D).scaled(P)},
      {"B^2=0", B * B},
      {"C^2=0", C * C},
      {"QBC+PCB=0", (B * C).scaled(Q) + (C * B).scaled(P)},
      {"[A,D]=(P-Q^-1)CB", commutator(A, D) - (C * B).scaled(P - Q.inverse())},
  };
}

/// (A - B D^-1 C) D^-1 with D an even unit.
template <Scalar S>
Element<S> superdeterminant(const SuperMatrix<S>& X) {
  const Element<S> dinv = invert_even_unit(X.a22());
  return (X.a11() - X.a12() * dinv * X.a21()) * dinv;
}

}  // namespace glpq
