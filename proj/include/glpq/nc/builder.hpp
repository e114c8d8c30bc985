#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glpq/nc/presentation.hpp"

namespace glpq {

/// Assembles a Presentation from base relations later*earlier ->
/// lambda*earlier*later + correction between positive letters. Relations
/// involving inverse letters are derived at build time by conjugation; the
/// derivation needs products that themselves use the derived rules, so it
/// starts from the pure twists and iterates to a fixed point.
///
/// Scalars in base relations must be central (no shifts on a presentation
/// with invertible generators).
template <Scalar S>
class PresentationBuilder {
 public:
  explicit PresentationBuilder(S one, std::string label = {})
      : pres_(std::make_shared<Presentation<S>>(typename Presentation<S>::Key{}, std::move(one))) {
    pres_->label_ = std::move(label);
  }

  /// Even generators must all be declared before the odd ones.
  PresentationBuilder& even(const std::string& name, bool invertible) {
    if (!pres_->odd_names_.empty()) throw std::logic_error("declare even generators first");
    if (pres_->n_even() >= kMaxEven) throw std::logic_error("too many even generators");
    pres_->even_names_.push_back(name);
    pres_->invertible_.push_back(invertible);
    return *this;
  }

  PresentationBuilder& odd(const std::string& name) {
    if (pres_->n_odd() >= kMaxOdd) throw std::logic_error("too many odd generators");
    pres_->odd_names_.push_back(name);
    return *this;
  }

  PresentationBuilder& relation(const std::string& later, const std::string& earlier, S lambda,
                                std::vector<WordTerm<S>> correction = {}) {
    base_.push_back({gen(later), gen(earlier), std::move(lambda), std::move(correction)});
    return *this;
  }

  /// `inverse_shift` is applied to a coefficient that moves left across the
  /// odd generator: g*c = inverse_shift(c)*g.
  PresentationBuilder& shift(const std::string& odd_name, typename Presentation<S>::Shift inverse_shift) {
    const int g = gen(odd_name);
    if (!pres_->is_odd(g)) throw std::logic_error("shifts belong to odd generators");
    if (pres_->shifts_.empty()) {
      pres_->shifts_.assign(static_cast<std::size_t>(pres_->n_odd()), [](const S& c) { return c; });
    }
    pres_->shifts_[static_cast<std::size_t>(g - pres_->n_even())] = std::move(inverse_shift);
    return *this;
  }

  PresentationBuilder& truncation(Truncation<S> t) {
    truncation_ = std::move(t);
    return *this;
  }

  std::shared_ptr<const Presentation<S>> build() {
    Presentation<S>& p = *pres_;
    for (int j = 0; j < p.n_gens(); ++j) {
      for (int i = 0; i < j; ++i) {
        if (find_base(j, i) == nullptr) {
          throw std::logic_error("no relation given for " + p.name(j) + "*" + p.name(i));
        }
      }
    }
    for (const Base& b : base_) {
      if (b.later <= b.earlier) throw std::logic_error("relations must rewrite later*earlier");
      if (p.has_shifts() && (p.invertible(b.later) || p.invertible(b.earlier))) {
        throw std::logic_error("inverse rules need central relation scalars");
      }
    }
    // Provisional pure twists lambda^(s_j*s_i) for every sign combination.
    for (const Base& b : base_) {
      for (const int sj : signs(b.later)) {
        for (const int si : signs(b.earlier)) {
          const Letter lj{b.later, sj};
          const Letter li{b.earlier, si};
          p.rules_[{lj.code(), li.code()}] = {{ordered(li, lj), sj * si > 0 ? b.lambda : b.lambda.inverse()}};
        }
      }
    }
    constexpr int kMaxRounds = 16;
    for (int round = 0; round < kMaxRounds; ++round) {
      p.clear_caches();
      auto next = p.rules_;
      for (const Base& b : base_) derive(b, next);
      if (next == p.rules_) {
        check_odd_monotone();
        p.clear_caches();
        p.truncation_ = truncation_;
        return pres_;
      }
      p.rules_ = std::move(next);
    }
    throw std::logic_error("inverse rule derivation did not converge");
  }

 private:
  struct Base {
    int later;
    int earlier;
    S lambda;
    std::vector<WordTerm<S>> correction;
  };

  // The kernel prunes on the assumption that rules never drop odd letters.
  void check_odd_monotone() const {
    const Presentation<S>& p = *pres_;
    for (const auto& [key, rhs] : p.rules_) {
      const Monomial lhs_odd = [&] {
        Monomial m;
        for (const int code : {key.first, key.second}) {
          const int g = code / 2;
          if (p.is_odd(g)) m.odd = static_cast<std::uint8_t>(m.odd | (1U << (g - p.n_even())));
        }
        return m;
      }();
      for (const auto& [m, c] : rhs) {
        if ((m.odd & lhs_odd.odd) != lhs_odd.odd) throw std::logic_error("a rewrite rule removes an odd generator");
      }
    }
  }

  int gen(const std::string& name) const {
    const auto g = pres_->index_of(name);
    if (!g) throw UnknownGenerator(name);
    return *g;
  }

  const Base* find_base(int j, int i) const {
    for (const Base& b : base_) {
      if (b.later == j && b.earlier == i) return &b;
    }
    return nullptr;
  }

  std::vector<int> signs(int g) const { return pres_->invertible(g) ? std::vector<int>{1, -1} : std::vector<int>{1}; }

  Monomial ordered(Letter first, Letter second) const {
    Monomial m = pres_->letter_monomial(first);
    const Monomial s = pres_->letter_monomial(second);
    for (int g = 0; g < kMaxEven; ++g) m.even[g] += s.even[g];
    m.odd = static_cast<std::uint8_t>(m.odd | s.odd);
    return m;
  }

  TermMap<S> letter(int g, int sign) const { return {{pres_->letter_monomial({g, sign}), pres_->one()}}; }

  static TermMap<S> scaled(const TermMap<S>& t, const S& c) {
    TermMap<S> r;
    for (const auto& [m, x] : t) r.emplace(m, c * x);
    Presentation<S>::drop_zeros(r);
    return r;
  }

  static void add_into(TermMap<S>& out, const TermMap<S>& t) {
    for (const auto& [m, c] : t) Presentation<S>::accumulate(out, m, c);
    Presentation<S>::drop_zeros(out);
  }

  TermMap<S> product(std::initializer_list<const TermMap<S>*> factors) const {
    TermMap<S> acc{{Monomial{}, pres_->one()}};
    for (const auto* f : factors) acc = pres_->multiply(acc, *f);
    return acc;
  }

  void derive(const Base& b, std::map<std::pair<int, int>, TermMap<S>>& out) const {
    const Presentation<S>& p = *pres_;
    const int j = b.later;
    const int i = b.earlier;
    TermMap<S> corr;
    for (const WordTerm<S>& w : b.correction) {
      std::vector<std::pair<int, int>> word;
      for (const auto& [name, e] : w.word) word.emplace_back(gen(name), e);
      add_into(corr, p.normalize(word, w.coeff));
    }
    const S& lam = b.lambda;
    const S lam_inv = lam.inverse();

    TermMap<S> pp{{ordered({i, 1}, {j, 1}), lam}};
    add_into(pp, corr);
    out[{Letter{j, 1}.code(), Letter{i, 1}.code()}] = pp;

    if (p.invertible(i)) {
      // g_j g_i^-1 = lam^-1 g_i^-1 g_j - lam^-1 g_i^-1 C g_i^-1
      const TermMap<S> ii = letter(i, -1);
      TermMap<S> r{{ordered({i, -1}, {j, 1}), lam_inv}};
      add_into(r, scaled(product({&ii, &corr, &ii}), -lam_inv));
      out[{Letter{j, 1}.code(), Letter{i, -1}.code()}] = r;
    }
    if (p.invertible(j)) {
      // g_j^-1 g_i = lam^-1 g_i g_j^-1 - lam^-1 g_j^-1 C g_j^-1
      const TermMap<S> jj = letter(j, -1);
      TermMap<S> r{{ordered({i, 1}, {j, -1}), lam_inv}};
      add_into(r, scaled(product({&jj, &corr, &jj}), -lam_inv));
      out[{Letter{j, -1}.code(), Letter{i, 1}.code()}] = r;
    }
    if (p.invertible(i) && p.invertible(j)) {
      // g_j^-1 g_i^-1 = lam g_i^-1 g_j^-1 + g_i^-1 g_j^-1 C g_j^-1 g_i^-1
      const TermMap<S> ii = letter(i, -1);
      const TermMap<S> jj = letter(j, -1);
      TermMap<S> r{{ordered({i, -1}, {j, -1}), lam}};
      add_into(r, product({&ii, &jj, &corr, &jj, &ii}));
      out[{Letter{j, -1}.code(), Letter{i, -1}.code()}] = r;
    }
  }

  std::shared_ptr<Presentation<S>> pres_;
  std::vector<Base> base_;
  std::optional<Truncation<S>> truncation_;
};

}  // namespace glpq
