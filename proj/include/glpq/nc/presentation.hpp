#pragma once

#include <omp.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "glpq/coeff/errors.hpp"
#include "glpq/coeff/scalar.hpp"
#include "glpq/nc/monomial.hpp"

namespace glpq {

template <Scalar S>
using TermMap = std::map<Monomial, S, MonomialLess>;

/// Filtration used to truncate products. Terms whose weight exceeds
/// `max_weight` are dropped; `finish` may then adjust or validate each
/// surviving coefficient (and may throw).
template <Scalar S>
struct Truncation {
  int max_weight = 0;
  std::function<int(const Monomial&, const S&)> weight;
  std::function<void(const Monomial&, S&)> finish;
};

/// A word with a scalar in front, written with generator names.
template <Scalar S>
struct WordTerm {
  S coeff;
  std::vector<std::pair<std::string, int>> word;
};

template <Scalar S>
class PresentationBuilder;

/// Generators, rewrite rules and coefficient shifts of one algebra.
///
/// Rules are stored for every ordered pair of letters (later, earlier) with
/// later.gen > earlier.gen, as canonical right-hand sides. Products are
/// memoized per (monomial, letter) and per monomial pair; the caches are the
/// only mutable state and are guarded by a lock.
template <Scalar S>
class Presentation {
 public:
  using Shift = std::function<S(const S&)>;
  struct Key {};

  Presentation(Key, S one) : one_(std::move(one)) {}

  const std::string& label() const { return label_; }
  int n_even() const { return static_cast<int>(even_names_.size()); }
  int n_odd() const { return static_cast<int>(odd_names_.size()); }
  int n_gens() const { return n_even() + n_odd(); }
  bool is_odd(int gen) const { return gen >= n_even(); }
  bool invertible(int gen) const { return !is_odd(gen) && invertible_[gen]; }
  const std::string& name(int gen) const {
    return is_odd(gen) ? odd_names_[gen - n_even()] : even_names_[gen];
  }
  std::optional<int> index_of(const std::string& name) const {
    for (int g = 0; g < n_gens(); ++g) {
      if (this->name(g) == name) return g;
    }
    return std::nullopt;
  }
  const S& one() const { return one_; }
  bool has_shifts() const { return !shifts_.empty(); }
  const std::optional<Truncation<S>>& truncation() const { return truncation_; }

  /// Canonical monomial of a single letter.
  Monomial letter_monomial(Letter l) const {
    Monomial m;
    if (is_odd(l.gen)) {
      m.odd = static_cast<std::uint8_t>(1U << (l.gen - n_even()));
    } else {
      m.even[l.gen] = l.sign;
    }
    return m;
  }

  /// Rewrites of later*earlier; null when the pair is already ordered.
  const TermMap<S>* rule(Letter later, Letter earlier) const {
    const auto it = rules_.find({later.code(), earlier.code()});
    return it == rules_.end() ? nullptr : &it->second;
  }

  /// The scalar c' with m*c = c'*m, i.e. c moved left across the odd letters
  /// of m (rightmost first).
  S move_left(const Monomial& m, S c) const {
    if (shifts_.empty()) return c;
    for (int i = n_odd() - 1; i >= 0; --i) {
      if (m.has_odd(i)) c = shifts_[i](c);
    }
    return c;
  }

  /// Same as move_left for an arbitrary (not necessarily canonical) word.
  S move_left(const std::vector<Letter>& word, std::size_t len, S c) const {
    if (shifts_.empty()) return c;
    for (std::size_t k = len; k-- > 0;) {
      if (is_odd(word[k].gen)) c = shifts_[static_cast<std::size_t>(word[k].gen - n_even())](c);
    }
    return c;
  }

  /// Canonical form of m * l, keeping only terms whose odd letters avoid
  /// `forbid`. Rules never remove odd letters, so a term that already
  /// carries a forbidden odd letter can only end up multiplied to zero; the
  /// mask prunes such branches before they are expanded.
  TermMap<S> times_letter(const Monomial& m, Letter l, unsigned forbid = 0) const {
    if (m.odd & forbid) return {};
    const auto key = std::make_pair(m, l.code() | static_cast<int>(forbid << 8));
    {
      std::shared_lock lock(mutex_);
      const auto it = letter_cache_.find(key);
      if (it != letter_cache_.end()) return it->second;
    }
    TermMap<S> r = times_letter_uncached(m, l, forbid);
    std::unique_lock lock(mutex_);
    letter_cache_.emplace(key, r);
    return r;
  }

  /// Canonical form of m1 * m2 restricted as in times_letter.
  TermMap<S> times_monomial(const Monomial& m1, const Monomial& m2, unsigned forbid = 0) const {
    if ((m1.odd & m2.odd) || ((m1.odd | m2.odd) & forbid)) return {};
    if (m2.is_one()) return {{m1, one_}};
    if (m1.is_one()) return {{m2, one_}};
    const auto key = std::make_tuple(m1, m2, static_cast<int>(forbid));
    {
      std::shared_lock lock(mutex_);
      const auto it = pair_cache_.find(key);
      if (it != pair_cache_.end()) return it->second;
    }
    const std::vector<Letter> letters = m2.letters(n_even());
    // Odd letters still to come may not appear in intermediate terms.
    std::vector<unsigned> later(letters.size() + 1, forbid);
    for (std::size_t k = letters.size(); k-- > 0;) {
      later[k] = later[k + 1];
      if (is_odd(letters[k].gen)) later[k] |= 1U << (letters[k].gen - n_even());
    }
    TermMap<S> cur{{m1, one_}};
    for (std::size_t k = 0; k < letters.size() && !cur.empty(); ++k) {
      TermMap<S> next;
      for (const auto& [m, c] : cur) {
        for (const auto& [mm, r] : times_letter(m, letters[k], later[k + 1])) accumulate(next, mm, c * r);
      }
      drop_zeros(next);
      cur = std::move(next);
    }
    std::unique_lock lock(mutex_);
    pair_cache_.emplace(key, cur);
    return cur;
  }

  /// Product of two canonical term maps (serial reference kernel).
  TermMap<S> multiply(const TermMap<S>& a, const TermMap<S>& b) const {
    TermMap<S> out;
    for (const auto& [m1, c1] : a) multiply_row(m1, c1, b, out);
    finalize(out);
    return out;
  }

  /// Same product with the rows of `a` spread over OpenMP threads.
  TermMap<S> multiply_parallel(const TermMap<S>& a, const TermMap<S>& b) const {
    std::vector<std::pair<Monomial, S>> rows(a.begin(), a.end());
    const int n = static_cast<int>(rows.size());
    std::vector<TermMap<S>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      multiply_row(rows[i].first, rows[i].second, b, partial[static_cast<std::size_t>(omp_get_thread_num())]);
    }
    TermMap<S> out;
    for (auto& part : partial) {
      for (auto& [m, c] : part) accumulate(out, m, c);
    }
    finalize(out);
    return out;
  }

  /// Canonical form of coeff * w_1^k_1 * ... * w_r^k_r.
  TermMap<S> normalize(const std::vector<std::pair<int, int>>& word, const S& coeff) const {
    TermMap<S> cur;
    if (!coeff.is_zero()) cur.emplace(Monomial{}, coeff);
    for (const auto& [gen, exp] : word) {
      if (gen < 0 || gen >= n_gens()) throw UnknownGenerator(std::to_string(gen));
      if (exp < 0 && !invertible(gen)) throw NonInvertibleNegativePower(name(gen));
      if (is_odd(gen) && exp >= 2) cur.clear();
      const int reps = exp < 0 ? -exp : exp;
      const Letter l{gen, exp < 0 ? -1 : 1};
      for (int k = 0; k < reps && !cur.empty(); ++k) {
        TermMap<S> next;
        for (const auto& [m, c] : cur) {
          for (const auto& [mm, r] : times_letter(m, l)) accumulate(next, mm, c * r);
        }
        drop_zeros(next);
        cur = std::move(next);
      }
    }
    finalize(cur);
    return cur;
  }

  /// Applies the truncation (if any) and removes zero terms.
  void finalize(TermMap<S>& t) const {
    if (truncation_) {
      for (auto it = t.begin(); it != t.end();) {
        if (truncation_->weight(it->first, it->second) > truncation_->max_weight) {
          it = t.erase(it);
          continue;
        }
        if (truncation_->finish) truncation_->finish(it->first, it->second);
        ++it;
      }
    }
    drop_zeros(t);
  }

  static void accumulate(TermMap<S>& out, const Monomial& m, const S& c) {
    const auto it = out.find(m);
    if (it == out.end()) {
      out.emplace(m, c);
    } else {
      it->second = it->second + c;
    }
  }

  static void drop_zeros(TermMap<S>& t) {
    std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); });
  }

  void clear_caches() const {
    std::unique_lock lock(mutex_);
    letter_cache_.clear();
    pair_cache_.clear();
  }

 private:
  friend class PresentationBuilder<S>;

  void multiply_row(const Monomial& m1, const S& c1, const TermMap<S>& b, TermMap<S>& out) const {
    const int w1 = truncation_ ? truncation_->weight(m1, c1) : 0;
    for (const auto& [m2, c2] : b) {
      if (truncation_ && w1 + truncation_->weight(m2, c2) > truncation_->max_weight) continue;
      const S c = c1 * move_left(m1, c2);
      for (const auto& [m, r] : times_monomial(m1, m2)) accumulate(out, m, c * r);
    }
  }

  int highest_gen(const Monomial& m) const {
    for (int i = n_odd() - 1; i >= 0; --i) {
      if (m.has_odd(i)) return n_even() + i;
    }
    for (int g = n_even() - 1; g >= 0; --g) {
      if (m.even[g] != 0) return g;
    }
    return -1;
  }

  TermMap<S> times_letter_uncached(const Monomial& m, Letter l, unsigned forbid) const {
    const int h = highest_gen(m);
    if (h <= l.gen) {
      Monomial r = m;
      if (is_odd(l.gen)) {
        const int bit = l.gen - n_even();
        if (r.has_odd(bit) || (forbid >> bit) & 1U) return {};
        r.odd = static_cast<std::uint8_t>(r.odd | (1U << bit));
      } else {
        r.even[l.gen] += l.sign;
      }
      return {{r, one_}};
    }
    Letter last{h, 1};
    Monomial rest = m;
    if (is_odd(h)) {
      rest.odd = static_cast<std::uint8_t>(rest.odd & ~(1U << (h - n_even())));
    } else {
      last.sign = m.even[h] < 0 ? -1 : 1;
      rest.even[h] -= last.sign;
    }
    const TermMap<S>* rhs = rule(last, l);
    if (rhs == nullptr) throw std::logic_error("missing rewrite rule for " + name(h) + "*" + name(l.gen));
    TermMap<S> out;
    for (const auto& [w, c] : *rhs) {
      if (w.odd & forbid) continue;
      const S moved = move_left(rest, c);
      for (const auto& [mm, r] : times_monomial(rest, w, forbid)) accumulate(out, mm, moved * r);
    }
    drop_zeros(out);
    return out;
  }

  S one_;
  std::string label_;
  std::vector<std::string> even_names_;
  std::vector<bool> invertible_;
  std::vector<std::string> odd_names_;
  std::map<std::pair<int, int>, TermMap<S>> rules_;
  std::vector<Shift> shifts_;
  std::optional<Truncation<S>> truncation_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Monomial, int>, TermMap<S>, PairLess> letter_cache_;
  mutable std::map<std::tuple<Monomial, Monomial, int>, TermMap<S>, PairLess> pair_cache_;

};

}  // namespace glpq
