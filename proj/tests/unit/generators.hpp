#pragma once

// Hand-rolled random generators shared by the property tests.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "glpq/mside/m_algebra.hpp"
#include "glpq/tside/algebra.hpp"

namespace glpq::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small rational times p^i q^j, occasionally a two-term polynomial.
inline RatFunc pq_scalar(Rng& rng, const SymbolSetPtr& s) {
  const RatFunc p = RatFunc::symbol(s, "p");
  const RatFunc q = RatFunc::symbol(s, "q");
  int num = uniform(rng, -4, 4);
  if (num == 0) num = 1;
  const RatFunc c = RatFunc::constant(s, mpq_class(num, uniform(rng, 1, 3)));
  RatFunc r = c * p.pow(uniform(rng, -2, 2)) * q.pow(uniform(rng, -2, 2));
  if (uniform(rng, 0, 3) == 0) r = r + RatFunc::constant(s, uniform(rng, -2, 2)) * q;
  return r;
}

/// Word over the T-side generators as (generator index, exponent) pairs;
/// exponents of a, d in [-3, 3], of beta, gamma in {1, 2}.
inline std::vector<std::pair<int, int>> tside_word(Rng& rng, int max_len) {
  std::vector<std::pair<int, int>> w;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    const int g = uniform(rng, 0, 3);
    int e = g < 2 ? uniform(rng, -3, 3) : (uniform(rng, 0, 5) == 0 ? 2 : 1);
    if (e == 0) e = 1;
    w.emplace_back(g, e);
  }
  return w;
}

/// Letters of a word, each exponent spelled out.
inline std::vector<Letter> spell(const std::vector<std::pair<int, int>>& w) {
  std::vector<Letter> out;
  for (const auto& [g, e] : w) {
    for (int k = 0; k < (e < 0 ? -e : e); ++k) out.push_back({g, e < 0 ? -1 : 1});
  }
  return out;
}

/// Sum of up to `terms` random words with random coefficients.
inline Element<RatFunc> tside_element(Rng& rng, const TSide<RatFunc>& t, int terms = 3, int max_len = 4) {
  const auto& pres = t.presentation();
  Element<RatFunc> e(pres);
  const int n = uniform(rng, 1, terms);
  for (int i = 0; i < n; ++i) {
    e += Element<RatFunc>(pres, pres->normalize(tside_word(rng, max_len), pq_scalar(rng, t.p().symbols())));
  }
  return e;
}

/// Homogeneous random element: every word has the requested parity.
inline Element<RatFunc> tside_homogeneous(Rng& rng, const TSide<RatFunc>& t, int parity) {
  const auto& pres = t.presentation();
  Element<RatFunc> e(pres);
  for (int i = 0; i < uniform(rng, 1, 3); ++i) {
    auto w = tside_word(rng, 3);
    int odd = 0;
    for (const auto& [g, k] : w) odd += g >= 2 ? k : 0;
    if ((odd & 1) != parity) w.emplace_back(uniform(rng, 2, 3), 1);
    e += Element<RatFunc>(pres, pres->normalize(w, pq_scalar(rng, t.p().symbols())));
  }
  return e;
}

/// Random M-side coefficient: polynomial in x, y, phi with small
/// coefficients, times p^i q^j and E1^k E2^l.
inline MCoefficient m_coefficient(Rng& rng) {
  const auto s = MCoefficient::symbols();
  const RatFunc x = RatFunc::symbol(s, "x");
  const RatFunc y = RatFunc::symbol(s, "y");
  const RatFunc phi = RatFunc::symbol(s, "phi");
  RatFunc r = RatFunc::constant(s, uniform(rng, -3, 3));
  r = r + RatFunc::constant(s, uniform(rng, -2, 2)) * x.pow(uniform(rng, 0, 2));
  r = r + RatFunc::constant(s, uniform(rng, -2, 2)) * y * phi.pow(uniform(rng, 0, 1));
  if (r.is_zero()) r = x;
  r = r * pq_scalar(rng, s);
  return MCoefficient::from_ratfunc(r, uniform(rng, -1, 1), uniform(rng, -1, 1));
}

inline MElement m_element(Rng& rng, const MSide& m) {
  MElement e = m.zero();
  const MElement words[] = {m.one(), m.mu(), m.nu(), m.mu() * m.nu()};
  for (int i = 0; i < uniform(rng, 1, 3); ++i) {
    // Coefficients on both sides of the word so that the shifts are exercised.
    e += m.scalar(m_coefficient(rng)) * words[uniform(rng, 0, 3)] * m.scalar(m_coefficient(rng));
  }
  return e;
}

}  // namespace glpq::testgen
