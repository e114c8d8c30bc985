#pragma once

#include <map>
#include <vector>

#include "glpq/nc/presentation.hpp"

namespace glpq {

/// Which redex the reference rewriter reduces first.
enum class Strategy { Leftmost, Rightmost };

namespace detail {

inline bool word_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Letter x, Letter y) { return x.code() < y.code(); });
}

}  // namespace detail

/// Reference normalizer: rewrites whole words one adjacent pair at a time
/// using only the rule table, with no monomial arithmetic. It exists to
/// cross-check the recursive multiplication kernel and to test that the
/// normal form does not depend on the reduction order.
template <Scalar S>
TermMap<S> rewrite_normalize(const Presentation<S>& p, const std::vector<Letter>& word, const S& coeff,
                             Strategy strategy) {
  using Word = std::vector<Letter>;
  using Less = bool (*)(const Word&, const Word&);
  std::map<Word, S, Less> pending(&detail::word_less);
  TermMap<S> done;
  if (!coeff.is_zero()) pending.emplace(word, coeff);

  // Index i of the redex (i, i+1), or -1 when the word is canonical.
  auto find_redex = [&](const Word& w) -> long {
    long found = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Letter x = w[i];
      const Letter y = w[i + 1];
      const bool redex = x.gen > y.gen || (x.gen == y.gen && (p.is_odd(x.gen) || x.sign != y.sign));
      if (!redex) continue;
      found = static_cast<long>(i);
      if (strategy == Strategy::Leftmost) break;
    }
    return found;
  };

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word w = std::move(node.key());
    const S c = std::move(node.mapped());
    if (c.is_zero()) continue;
    const long r = find_redex(w);
    if (r < 0) {
      Monomial m;
      for (const Letter l : w) {
        if (p.is_odd(l.gen)) {
          m.odd = static_cast<std::uint8_t>(m.odd | (1U << (l.gen - p.n_even())));
        } else {
          m.even[l.gen] += l.sign;
        }
      }
      Presentation<S>::accumulate(done, m, c);
      continue;
    }
    const auto i = static_cast<std::size_t>(r);
    const Letter x = w[i];
    const Letter y = w[i + 1];
    // Rules keep the multiset of odd letters and a canonical monomial holds
    // each odd letter at most once, so such words reduce to zero along any
    // path. Dropping them early keeps the leftmost strategy from expanding
    // nilpotent terms forever.
    auto push = [&](Word nw, const S& nc) {
      unsigned seen = 0;
      for (const Letter l : nw) {
        if (!p.is_odd(l.gen)) continue;
        const unsigned bit = 1U << (l.gen - p.n_even());
        if (seen & bit) return;
        seen |= bit;
      }
      const auto it = pending.find(nw);
      if (it == pending.end()) {
        pending.emplace(std::move(nw), nc);
      } else {
        it->second = it->second + nc;
      }
    };
    if (x.gen == y.gen) {
      if (p.is_odd(x.gen)) continue;
      Word nw(w.begin(), w.begin() + static_cast<long>(i));
      nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      push(std::move(nw), c);
      continue;
    }
    const TermMap<S>* rhs = p.rule(x, y);
    if (rhs == nullptr) throw std::logic_error("missing rewrite rule");
    for (const auto& [m, rc] : *rhs) {
      Word nw(w.begin(), w.begin() + static_cast<long>(i));
      const auto mid = m.letters(p.n_even());
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      push(std::move(nw), c * p.move_left(w, i, rc));
    }
  }
  p.finalize(done);
  return done;
}

}  // namespace glpq
