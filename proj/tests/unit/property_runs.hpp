#pragma once

// Randomized engine properties, shared by the unit tests and the acceptance
// binary. Each run reports how many instances it checked and the first
// counterexample, if any.

#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "glpq/nc/rewrite.hpp"

namespace glpq::proptest {

struct PropertyRun {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

inline Parity parity_of(int p) { return p == 0 ? Parity::Even : Parity::Odd; }

inline PropertyRun idempotence(int n, std::uint64_t seed) {
  PropertyRun r{"idempotence"};
  const auto t = make_exact_tside();
  const auto& pres = *t.presentation();
  testgen::Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const auto e = testgen::tside_element(rng, t);
    // Re-normalize every canonical word of e from its letters.
    Element<RatFunc> again(t.presentation());
    for (const auto& [m, c] : e.terms()) {
      std::vector<std::pair<int, int>> word;
      for (const Letter l : m.letters(pres.n_even())) word.emplace_back(l.gen, l.sign);
      again += Element<RatFunc>(t.presentation(), pres.normalize(word, c));
    }
    r.record(again == e, [&] { return e.to_string(); });
  }
  return r;
}

/// Leftmost and rightmost rewriting of the spelled-out word agree with each
/// other and with the multiplication kernel.
inline PropertyRun confluence(int n, std::uint64_t seed) {
  PropertyRun r{"confluence"};
  const auto t = make_exact_tside();
  const auto& pres = *t.presentation();
  testgen::Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const auto word = testgen::tside_word(rng, 12);
    const auto letters = testgen::spell(word);
    const auto left = rewrite_normalize(pres, letters, t.one(), Strategy::Leftmost);
    const auto right = rewrite_normalize(pres, letters, t.one(), Strategy::Rightmost);
    const auto kernel = pres.normalize(word, t.one());
    r.record(left == right && left == kernel, [&] {
      std::string s;
      for (const auto& [g, e] : word) s += pres.name(g) + "^" + std::to_string(e) + " ";
      return s;
    });
  }
  return r;
}

inline PropertyRun ring_axioms(int n, std::uint64_t seed) {
  PropertyRun r{"ring_axioms"};
  const auto t = make_exact_tside();
  testgen::Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const auto x = testgen::tside_element(rng, t, 2, 3);
    const auto y = testgen::tside_element(rng, t, 2, 3);
    const auto z = testgen::tside_element(rng, t, 2, 3);
    const bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && (x + y) * z == x * z + y * z &&
                    x + y == y + x && (x - x).is_zero();
    r.record(ok, [&] { return x.to_string() + " | " + y.to_string() + " | " + z.to_string(); });
  }
  return r;
}

/// Associativity and distributivity where coefficients shift across odd
/// letters.
inline PropertyRun ring_axioms_with_shifts(int n, std::uint64_t seed) {
  PropertyRun r{"ring_axioms_with_shifts"};
  const MSide m;
  testgen::Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const auto x = testgen::m_element(rng, m);
    const auto y = testgen::m_element(rng, m);
    const auto z = testgen::m_element(rng, m);
    r.record((x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z,
             [&] { return x.to_string() + " | " + y.to_string() + " | " + z.to_string(); });
  }
  return r;
}

/// Homogeneous elements keep their parity and parities add under products.
inline PropertyRun parity(int n, std::uint64_t seed) {
  PropertyRun r{"parity"};
  const auto t = make_exact_tside();
  testgen::Rng rng(seed);
  while (r.instances < n) {
    const int px = testgen::uniform(rng, 0, 1);
    const int py = testgen::uniform(rng, 0, 1);
    const auto x = testgen::tside_homogeneous(rng, t, px);
    const auto y = testgen::tside_homogeneous(rng, t, py);
    if (x.is_zero() || y.is_zero()) continue;
    const auto xy = x * y;
    if (xy.is_zero()) continue;
    const bool ok = x.parity() == parity_of(px) && y.parity() == parity_of(py) &&
                    xy.parity() == parity_of((px + py) % 2);
    r.record(ok, [&] { return x.to_string() + " | " + y.to_string(); });
  }
  return r;
}

/// beta a^n d^m = beta d^m a^n and the same with gamma, for n, m in [-3, 3]
/// and a random scalar in front.
inline PropertyRun commuting_quantities(int n, std::uint64_t seed) {
  PropertyRun r{"commuting_quantities"};
  const auto t = make_exact_tside();
  testgen::Rng rng(seed);
  while (r.instances < n) {
    for (int i = -3; i <= 3; ++i) {
      for (int j = -3; j <= 3; ++j) {
        const auto c = t.scalar(testgen::pq_scalar(rng, t.p().symbols()));
        for (const auto* odd : {&t.beta(), &t.gamma()}) {
          const auto lhs = c * *odd * t.a().pow(i) * t.d().pow(j);
          const auto rhs = c * *odd * t.d().pow(j) * t.a().pow(i);
          r.record(lhs == rhs, [&] { return "n=" + std::to_string(i) + " m=" + std::to_string(j); });
        }
      }
    }
  }
  return r;
}

inline std::vector<PropertyRun> all_properties(int n, std::uint64_t seed) {
  return {idempotence(n, seed),     confluence(n, seed + 1), ring_axioms(n, seed + 2),
          ring_axioms_with_shifts(n, seed + 3), parity(n, seed + 4), commuting_quantities(n, seed + 5)};
}

}  // namespace glpq::proptest
