#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "glpq/coeff/errors.hpp"
#include "glpq/nc/presentation.hpp"

namespace glpq {

enum class Parity { Zero, Even, Odd, Mixed };

/// True when `s` is a sum at its top level, i.e. needs parentheses before a
/// following '*'.
inline bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-') && s[i - 1] == ' ') return true;
  }
  return false;
}

/// Canonical element of an algebra: monomials with nonzero coefficients
/// written on the left. Equality of Elements is equality of the maps.
template <Scalar S>
class Element {
 public:
  using Pres = Presentation<S>;
  using PresPtr = std::shared_ptr<const Pres>;

  Element() = default;
  explicit Element(PresPtr p) : pres_(std::move(p)) {}
  Element(PresPtr p, TermMap<S> terms) : pres_(std::move(p)), terms_(std::move(terms)) {
    if (pres_) pres_->finalize(terms_);
  }

  static Element scalar(PresPtr p, const S& c) { return Element(p, TermMap<S>{{Monomial{}, c}}); }
  static Element one(PresPtr p) { return scalar(p, p->one()); }
  static Element generator(PresPtr p, const std::string& name, int power = 1) {
    return word(p, {{name, power}}, p->one());
  }
  static Element word(PresPtr p, const std::vector<std::pair<std::string, int>>& w, const S& coeff) {
    std::vector<std::pair<int, int>> idx;
    for (const auto& [name, e] : w) {
      const auto g = p->index_of(name);
      if (!g) throw UnknownGenerator(name);
      idx.emplace_back(*g, e);
    }
    TermMap<S> t = p->normalize(idx, coeff);
    return Element(std::move(p), std::move(t));
  }

  const PresPtr& presentation() const { return pres_; }
  const TermMap<S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    if (it != terms_.end()) return it->second;
    return pres_ ? pres_->one().constant_like(0) : S{};
  }

  Parity parity() const {
    bool even = false;
    bool odd = false;
    for (const auto& [m, c] : terms_) (m.parity() ? odd : even) = true;
    if (even && odd) return Parity::Mixed;
    if (odd) return Parity::Odd;
    return even ? Parity::Even : Parity::Zero;
  }

  Element operator+(const Element& o) const {
    const PresPtr& p = common(o);
    TermMap<S> t = terms_;
    for (const auto& [m, c] : o.terms_) Pres::accumulate(t, m, c);
    return Element(p, std::move(t));
  }
  Element operator-() const {
    TermMap<S> t;
    for (const auto& [m, c] : terms_) t.emplace(m, -c);
    return Element(pres_, std::move(t));
  }
  Element operator-(const Element& o) const { return *this + (-o); }
  Element operator*(const Element& o) const {
    const PresPtr& p = common(o);
    if (!p || is_zero() || o.is_zero()) return Element(p);
    return Element(p, p->multiply(terms_, o.terms_));
  }
  Element multiply_parallel(const Element& o) const {
    const PresPtr& p = common(o);
    if (!p || is_zero() || o.is_zero()) return Element(p);
    return Element(p, p->multiply_parallel(terms_, o.terms_));
  }
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  /// c * e.
  Element scaled(const S& c) const {
    TermMap<S> t;
    for (const auto& [m, x] : terms_) t.emplace(m, c * x);
    return Element(pres_, std::move(t));
  }
  /// e * c; the scalar crosses each monomial.
  Element times_scalar(const S& c) const {
    TermMap<S> t;
    for (const auto& [m, x] : terms_) t.emplace(m, x * pres_->move_left(m, c));
    return Element(pres_, std::move(t));
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  Element pow(int n) const;

  /// Applies f to every coefficient (f must be additive for the result to
  /// mean anything) and re-canonicalizes.
  Element map_coefficients(const std::function<S(const S&)>& f) const {
    TermMap<S> t;
    for (const auto& [m, c] : terms_) t.emplace(m, f(c));
    return Element(pres_, std::move(t));
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    auto add = [&s](const std::string& f) {
      if (!s.empty()) s += '*';
      s += f;
    };
    for (int g = 0; g < pres_->n_even(); ++g) {
      if (m.even[g] == 0) continue;
      add(m.even[g] == 1 ? pres_->name(g) : pres_->name(g) + "^" + std::to_string(m.even[g]));
    }
    for (int i = 0; i < pres_->n_odd(); ++i) {
      if (m.has_odd(i)) add(pres_->name(pres_->n_even() + i));
    }
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string mono = monomial_string(m);
      std::string cs = c.to_string();
      std::string term;
      const bool sum = has_top_level_sum(cs);
      if (mono.empty()) {
        term = sum && terms_.size() > 1 ? "(" + cs + ")" : cs;
      } else if (c.is_one()) {
        term = mono;
      } else if ((-c).is_one()) {
        term = "-" + mono;
      } else if (sum) {
        term = "(" + cs + ")*" + mono;
      } else {
        term = cs + "*" + mono;
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  const PresPtr& common(const Element& o) const {
    if (!pres_) return o.pres_;
    if (!o.pres_) return pres_;
    if (pres_ != o.pres_) throw PresentationMismatch();
    return pres_;
  }

  PresPtr pres_;
  TermMap<S> terms_;
};

template <Scalar S>
Element<S> commutator(const Element<S>& x, const Element<S>& y) {
  return x * y - y * x;
}

template <Scalar S>
Element<S> anticommutator(const Element<S>& x, const Element<S>& y) {
  return x * y + y * x;
}

/// Inverse of u = c*m*(1 + n) with m an invertible even monomial and n
/// nilpotent; the geometric series in n terminates because every term of n
/// carries an odd generator.
template <Scalar S>
Element<S> invert_even_unit(const Element<S>& u) {
  const auto& p = u.presentation();
  if (!p) throw NotAUnit("zero is not a unit");
  const Monomial* body = nullptr;
  S body_coeff;
  for (const auto& [m, c] : u.terms()) {
    if (m.odd != 0) continue;
    if (body != nullptr) throw NotAUnit("body is not a single monomial");
    body = &m;
    body_coeff = c;
  }
  if (body == nullptr) throw NotAUnit("element has no even body");
  std::vector<std::pair<int, int>> rev;
  for (int g = p->n_even() - 1; g >= 0; --g) {
    if (body->even[g] == 0) continue;
    if (!p->invertible(g)) throw NotAUnit("body contains non-invertible generator " + p->name(g));
    rev.emplace_back(g, -body->even[g]);
  }
  const Element<S> body_inv(p, p->normalize(rev, body_coeff.inverse()));
  const Element<S> one = Element<S>::one(p);
  const Element<S> n = body_inv * u - one;
  Element<S> sum = one;
  Element<S> term = one;
  for (int k = 1; k <= p->n_odd() + 1; ++k) {
    term = -(term * n);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * body_inv;
}

template <Scalar S>
Element<S> Element<S>::pow(int n) const {
  if (n < 0) return invert_even_unit(*this).pow(-n);
  Element r = one(pres_);
  Element base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

/// Image of e under the ring homomorphism given by a coefficient map and the
/// images of the generators.
template <Scalar S>
Element<S> apply_homomorphism(const Element<S>& e, const std::function<S(const S&)>& coeff_map,
                              const std::vector<Element<S>>& gen_images, const Element<S>& unit) {
  const auto& p = e.presentation();
  Element<S> out(unit.presentation());
  for (const auto& [m, c] : e.terms()) {
    Element<S> t = unit.scaled(coeff_map(c));
    for (const Letter l : m.letters(p->n_even())) {
      t = t * (l.sign > 0 ? gen_images[static_cast<std::size_t>(l.gen)]
                          : invert_even_unit(gen_images[static_cast<std::size_t>(l.gen)]));
    }
    out += t;
  }
  return out;
}

}  // namespace glpq
