#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace glpq {

inline constexpr int kMaxEven = 2;
inline constexpr int kMaxOdd = 2;

/// One factor of a word: generator index (evens first, then odds) and the
/// sign of its exponent.
struct Letter {
  int gen = 0;
  int sign = 1;

  int code() const { return gen * 2 + (sign < 0 ? 1 : 0); }
  bool operator==(const Letter&) const = default;
};

/// Canonical word e0^k0 e1^k1 o0^b0 o1^b1: Laurent exponents on the even
/// generators followed by presence bits for the odd ones.
struct Monomial {
  std::array<int, kMaxEven> even{};
  std::uint8_t odd = 0;

  int odd_count() const { return std::popcount(odd); }
  int even_degree() const { return even[0] + even[1]; }
  bool has_odd(int i) const { return (odd >> i) & 1U; }
  bool is_one() const { return even[0] == 0 && even[1] == 0 && odd == 0; }
  /// Parity of the number of odd letters.
  int parity() const { return odd_count() & 1; }

  /// Letters of the canonical word; odd generator i has index n_even + i.
  std::vector<Letter> letters(int n_even) const {
    std::vector<Letter> w;
    for (int g = 0; g < kMaxEven; ++g) {
      const int e = even[g];
      for (int k = 0; k < (e < 0 ? -e : e); ++k) w.push_back({g, e < 0 ? -1 : 1});
    }
    for (int i = 0; i < kMaxOdd; ++i) {
      if (has_odd(i)) w.push_back({n_even + i, 1});
    }
    return w;
  }

  bool operator==(const Monomial&) const = default;
};

/// Display and storage order: fewer odd letters first, then lower even degree,
/// then lexicographically larger even exponents, then odd bits.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.odd_count() != b.odd_count()) return a.odd_count() < b.odd_count();
    if (a.even_degree() != b.even_degree()) return a.even_degree() < b.even_degree();
    if (a.even != b.even) return a.even > b.even;
    return a.odd < b.odd;
  }
};

/// Cache-key order for (monomial, letter key) and (monomial, monomial, mask).
struct PairLess {
  bool operator()(const std::pair<Monomial, int>& a, const std::pair<Monomial, int>& b) const {
    if (a.second != b.second) return a.second < b.second;
    return MonomialLess{}(a.first, b.first);
  }
  bool operator()(const std::tuple<Monomial, Monomial, int>& a, const std::tuple<Monomial, Monomial, int>& b) const {
    const MonomialLess less;
    if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
    if (less(std::get<0>(a), std::get<0>(b))) return true;
    if (less(std::get<0>(b), std::get<0>(a))) return false;
    return less(std::get<1>(a), std::get<1>(b));
  }
};

}  // namespace glpq
