#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "glpq/report/identity.hpp"
#include "glpq/tside/algebra.hpp"

namespace glpq {

/// Lazily filled table of T^n shared by the checks of one suite.
template <Scalar S>
class PowerTable {
 public:
  explicit PowerTable(TSide<S> t) : t_(std::move(t)) {}

  SuperMatrix<S> get(int n) {
    std::lock_guard lock(mutex_);
    return get_locked(n);
  }
  const TSide<S>& algebra() const { return t_; }

 private:
  SuperMatrix<S> get_locked(int n) {
    const auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    SuperMatrix<S> r = t_.identity();
    if (n > 0) r = get_locked(n - 1) * t_.T();
    if (n == -1) r = t_.block_inverse(t_.T());
    if (n < -1) r = get_locked(n + 1) * get_locked(-1);
    cache_.emplace(n, r);
    return r;
  }

  TSide<S> t_;
  std::mutex mutex_;
  std::map<int, SuperMatrix<S>> cache_;
};

namespace tside_detail {

template <Scalar S>
using Sides = std::vector<std::pair<Element<S>, Element<S>>>;

template <Scalar S>
Sides<S> entrywise(const SuperMatrix<S>& x, const SuperMatrix<S>& y) {
  return {{x.a11(), y.a11()}, {x.a12(), y.a12()}, {x.a21(), y.a21()}, {x.a22(), y.a22()}};
}

inline std::string idx(const std::string& base, int n) { return base + "[" + std::to_string(n) + "]"; }
inline std::string idx(const std::string& base, int n, int m) {
  return base + "[" + std::to_string(n) + "," + std::to_string(m) + "]";
}

}  // namespace tside_detail

/// Identities of the defining algebra: powers of a - beta d^-1 gamma, the
/// exchange of a^n and d^m, powers of sdet, the super-inverse and centrality.
template <Scalar S>
std::vector<Identity<S>> section2_identities(const TSide<S>& t, int n_lo, int n_hi, int m_lo, int m_hi) {
  using E = Element<S>;
  using tside_detail::idx;
  std::vector<Identity<S>> out;
  const S& p = t.p();
  const S& q = t.q();
  const S one = t.one();

  for (int n = n_lo; n <= n_hi; ++n) {
    out.push_back({idx("odd_pair_power", n), "power of a - beta*d^-1*gamma", [t, n, p, q, one]() {
                     const E lhs = (t.a() - t.beta() * t.d_inv() * t.gamma()).pow(n);
                     const S c = (TSide<S>::spow(q, n) - TSide<S>::spow(p, -n)) * (q - p.inverse()).inverse();
                     const E rhs = t.a().pow(n) - t.word({{"beta", 1}, {"a", n - 1}, {"d", -1}, {"gamma", 1}}, c);
                     return tside_detail::Sides<S>{{lhs, rhs}};
                   }});
  }
  for (int n = m_lo; n <= m_hi; ++n) {
    for (int m = m_lo; m <= m_hi; ++m) {
      out.push_back({idx("power_exchange", n, m), "a^n*d^m reordered", [t, n, m, p, q]() {
                       const E lhs = t.a().pow(n) * t.d().pow(m);
                       const S c = (TSide<S>::spow(p, n) - TSide<S>::spow(q, -n)) *
                                   (TSide<S>::spow(p, m) - TSide<S>::spow(q, -m)) * (p - q.inverse()).inverse();
                       const E rhs = t.d().pow(m) * t.a().pow(n) +
                                     t.word({{"gamma", 1}, {"a", n - 1}, {"d", m - 1}, {"beta", 1}}, c);
                       return tside_detail::Sides<S>{{lhs, rhs}};
                     }});
    }
  }
  for (int n = n_lo; n <= n_hi; ++n) {
    out.push_back({idx("sdet_power", n), "power of sdet, closed form", [t, n]() {
                     return tside_detail::Sides<S>{{t.sdet(t.T()).pow(n), t.sdet_power_closed(n)}};
                   }});
    out.push_back({idx("sdet_power_delta2", n), "power of sdet as a^2n*Delta2^-n", [t, n]() {
                     return tside_detail::Sides<S>{{t.sdet(t.T()).pow(n), t.a().pow(2 * n) * t.delta2().pow(-n)}};
                   }});
    out.push_back({idx("delta2_power", n), "power of Delta2, closed form", [t, n, p, q, one]() {
                     const S c = -(p * (TSide<S>::spow(p, n) - TSide<S>::spow(q, -n)) * (p - q.inverse()).inverse());
                     const E rhs = t.a().pow(n) * t.d().pow(n) +
                                   t.word({{"a", n - 1}, {"gamma", 1}, {"d", n - 1}, {"beta", 1}}, c);
                     return tside_detail::Sides<S>{{t.delta2().pow(n), rhs}};
                   }});
  }

  out.push_back({"a_commutes_delta2", "a commutes with Delta2", [t]() {
                   return tside_detail::Sides<S>{{t.a() * t.delta2(), t.delta2() * t.a()}};
                 }});
  out.push_back({"super_inverse_right", "super-inverse from Delta1, Delta2", [t]() {
                   return tside_detail::entrywise(t.T() * t.sinverse(), t.identity());
                 }});
  out.push_back({"super_inverse_left", "super-inverse from Delta1, Delta2", [t]() {
                   return tside_detail::entrywise(t.sinverse() * t.T(), t.identity());
                 }});
  out.push_back({"super_inverse_schur", "super-inverse from Delta1, Delta2", [t]() {
                   return tside_detail::entrywise(t.block_inverse(t.T()), t.sinverse());
                 }});
  out.push_back({"sdet_delta2", "sdet = a^2*Delta2^-1", [t]() {
                   return tside_detail::Sides<S>{{t.sdet(t.T()), t.a().pow(2) * invert_even_unit(t.delta2())}};
                 }});
  out.push_back({"sdet_inverse_delta1", "sdet of inverse = d^2*Delta1^-1", [t]() {
                   return tside_detail::Sides<S>{{t.sdet(t.sinverse()), t.d().pow(2) * invert_even_unit(t.delta1())}};
                 }});
  out.push_back({"inverse_a2_delta2", "(a^2*Delta2^-1)^-1 = d^2*Delta1^-1", [t]() {
                   const E lhs = invert_even_unit(t.a().pow(2) * invert_even_unit(t.delta2()));
                   return tside_detail::Sides<S>{{lhs, t.d().pow(2) * invert_even_unit(t.delta1())}};
                 }});
  out.push_back({"sdet_of_inverse", "sdet of inverse is inverse of sdet", [t]() {
                   return tside_detail::Sides<S>{{t.sdet(t.sinverse()), invert_even_unit(t.sdet(t.T()))}};
                 }});
  const std::vector<std::pair<std::string, E>> gens = {{"a", t.a()},         {"a^-1", t.a_inv()}, {"d", t.d()},
                                                        {"d^-1", t.d_inv()}, {"beta", t.beta()},  {"gamma", t.gamma()}};
  for (const auto& [name, g] : gens) {
    out.push_back({"sdet_central[" + name + "]", "sdet is central", [t, g]() {
                     const E s = t.sdet(t.T());
                     return tside_detail::Sides<S>{{s * g, g * s}};
                   }});
  }
  return out;
}

/// Powers of T: closed blocks, the relations with parameters p^n, q^n,
/// Crout factorization and sdet of powers.
template <Scalar S>
std::vector<Identity<S>> section3_identities(const TSide<S>& t, int n_max) {
  using M = SuperMatrix<S>;
  using tside_detail::idx;
  auto table = std::make_shared<PowerTable<S>>(t);
  std::vector<Identity<S>> out;
  const S& p = t.p();
  const S& q = t.q();

  for (int n = 1; n <= n_max; ++n) {
    out.push_back({idx("power_blocks", n), "closed blocks of T^n", [t, table, n]() {
                     const PowerBlocks<S> b = t.closed_power_blocks(n);
                     return tside_detail::entrywise(table->get(n), M(b.A, b.B, b.C, b.D));
                   }});
    out.push_back({idx("power_relations", n), "T^n satisfies the relations at (p^n, q^n)", [t, table, n, p, q]() {
                     tside_detail::Sides<S> s;
                     const auto rel = t.gl_relations(table->get(n), TSide<S>::spow(p, n), TSide<S>::spow(q, n));
                     for (std::size_t i = 0; i + 1 < rel.size(); ++i) s.emplace_back(rel[i].second, t.zero());
                     return s;
                   }});
    out.push_back({idx("power_bracket", n), "[A_n,D_n] = (p^n - q^-n)*C_n*B_n", [t, table, n, p, q]() {
                     const auto rel = t.gl_relations(table->get(n), TSide<S>::spow(p, n), TSide<S>::spow(q, n));
                     return tside_detail::Sides<S>{{rel.back().second, t.zero()}};
                   }});
    out.push_back({idx("crout_product", n), "Crout factorization of T^n", [t, table, n]() {
                     const M x = table->get(n);
                     const Crout<S> c = t.crout(x);
                     return tside_detail::entrywise(c.lower * c.upper, x);
                   }});
    out.push_back({idx("sdet_factorizations", n), "sdet of T^n from both factorizations", [t, table, n]() {
                     const M x = table->get(n);
                     return tside_detail::Sides<S>{{t.sdet(t.crout(x).lower), t.sdet(x)}};
                   }});
    out.push_back({idx("sdet_power_closed", n), "sdet of T^n, closed form", [t, table, n]() {
                     return tside_detail::Sides<S>{{t.sdet(table->get(n)), t.sdet_power_closed(n)}};
                   }});
    out.push_back({idx("sdet_multiplicative", n), "sdet(T^n) = sdet(T)^n", [t, table, n]() {
                     return tside_detail::Sides<S>{{t.sdet(table->get(n)), t.sdet(t.T()).pow(n)}};
                   }});
  }
  out.push_back({"inverse_relations", "T^-1 satisfies the relations at (p^-1, q^-1)", [t, p, q]() {
                   tside_detail::Sides<S> s;
                   for (const auto& [name, diff] : t.gl_relations(t.sinverse(), p.inverse(), q.inverse())) {
                     s.emplace_back(diff, t.zero());
                   }
                   return s;
                 }});
  out.push_back({"power_minus_one", "T^-1 as a power", [t, table]() {
                   return tside_detail::entrywise(table->get(-1), t.sinverse());
                 }});
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      out.push_back({idx("power_additive", m, n), "T^(m+n) = T^m*T^n", [t, m, n]() {
                       return tside_detail::entrywise(t.power(t.T(), m + n), t.power(t.T(), m) * t.power(t.T(), n));
                     }});
    }
  }
  return out;
}

/// The inductive step for the bracket of power blocks: block recurrences
/// and the cancellation K - L = 0.
template <Scalar S>
std::vector<Identity<S>> appendix_identities(const TSide<S>& t, int k_max) {
  using E = Element<S>;
  using M = SuperMatrix<S>;
  using tside_detail::idx;
  auto table = std::make_shared<PowerTable<S>>(t);
  std::vector<Identity<S>> out;
  const S& p = t.p();
  const S& q = t.q();

  // K and L of the inductive step, built from the blocks of T and T^k.
  auto k_and_l = [t, p, q](const M& tk) {
    const E &A1 = t.a(), &B1 = t.beta(), &C1 = t.gamma(), &D1 = t.d();
    const E &Ak = tk.a11(), &Bk = tk.a12(), &Ck = tk.a21(), &Dk = tk.a22();
    return [=](int k) {
      auto sp = [](const S& s, int e) { return TSide<S>::spow(s, e); };
      const E K = (C1 * Ak * B1 * Dk).scaled(sp(p, 2 * k + 1) * sp(q, k) - sp(q, -k - 1)) +
                  (Ck * A1 * Bk * D1).scaled(sp(p, k + 1) - p * sp(q, -k)) +
                  (Ck * A1 * Ak * B1 - C1 * Ak * A1 * Bk).scaled(sp(p, k + 1)) +
                  (Dk * C1 * Bk * D1 - D1 * Ck * B1 * Dk).scaled(sp(p, k + 1));
      const E L = (Ck * A1 * Bk * D1).scaled(sp(p, k + 2) * q - p * sp(q, -k)) +
                  (C1 * Ak * B1 * Dk).scaled(sp(p, k + 1) - sp(q, -k - 1));
      return std::make_pair(K, L);
    };
  };

  for (int k = 1; k <= k_max; ++k) {
    out.push_back({idx("block_recurrences", k), "blocks of T^(k+1) from T and T^k", [t, table, k]() {
                     const M tk = table->get(k);
                     const M next = table->get(k + 1);
                     const E &A1 = t.a(), &B1 = t.beta(), &C1 = t.gamma(), &D1 = t.d();
                     return tside_detail::Sides<S>{{next.a11(), A1 * tk.a11() + B1 * tk.a21()},
                                                   {next.a21(), C1 * tk.a11() + D1 * tk.a21()},
                                                   {next.a12(), A1 * tk.a12() + B1 * tk.a22()},
                                                   {next.a22(), D1 * tk.a22() + C1 * tk.a12()}};
                   }});
    out.push_back({idx("two_sided_power", k), "T*T^k = T^k*T", [t, table, k]() {
                     const M tk = table->get(k);
                     return tside_detail::entrywise(t.T() * tk, tk * t.T());
                   }});
    out.push_back({idx("k_minus_l", k), "K - L = 0 in the inductive step", [t, table, k, k_and_l]() {
                     const auto [K, L] = k_and_l(table->get(k))(k);
                     return tside_detail::Sides<S>{{K - L, t.zero()}};
                   }});
    out.push_back({idx("bracket_step", k), "bracket of T^(k+1) blocks expanded", [t, table, k, k_and_l, p, q]() {
                     const M tk = table->get(k);
                     const M next = table->get(k + 1);
                     const auto [K, L] = k_and_l(tk)(k);
                     const E &A1 = t.a(), &B1 = t.beta(), &C1 = t.gamma(), &D1 = t.d();
                     const S pq = p * q;
                     const E lhs = commutator(next.a11(), next.a22());
                     const E first = (C1 * tk.a12() * A1 * tk.a11() -
                                      (D1 * tk.a22() * B1 * tk.a21()).scaled(TSide<S>::spow(pq, -k - 1)))
                                         .scaled(TSide<S>::spow(pq, k + 1) - t.one()) +
                                     K;
                     const E second =
                         (next.a21() * next.a12()).scaled(TSide<S>::spow(p, k + 1) - TSide<S>::spow(q, -k - 1)) + K -
                         L;
                     return tside_detail::Sides<S>{{lhs, first}, {lhs, second}};
                   }});
  }
  for (int n = 1; n <= k_max + 1; ++n) {
    out.push_back({idx("power_bracket", n), "[A_n,D_n] = (p^n - q^-n)*C_n*B_n", [t, table, n, p, q]() {
                     const M x = table->get(n);
                     const E rhs = (x.a21() * x.a12()).scaled(TSide<S>::spow(p, n) - TSide<S>::spow(q, -n));
                     return tside_detail::Sides<S>{{commutator(x.a11(), x.a22()), rhs}};
                   }});
  }
  return out;
}

}  // namespace glpq
