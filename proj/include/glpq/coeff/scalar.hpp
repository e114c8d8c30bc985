#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>

namespace glpq {

/// What the noncommutative engine needs from a coefficient ring.
template <class S>
concept Scalar = std::copyable<S> && requires(const S a, const S b, const mpq_class& c) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.is_single_term() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<S>;
  { a.constant_like(c) } -> std::convertible_to<S>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

}  // namespace glpq
