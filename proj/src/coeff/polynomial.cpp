#include "glpq/coeff/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace glpq {

int compare_grlex(const Exponents& a, const Exponents& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_greater(const Polynomial::Term& x, const Polynomial::Term& y) {
  return compare_grlex(x.exps, y.exps) > 0;
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  }
  return r;
}

Exponents sub_exps(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  }
  return r;
}

}  // namespace

Polynomial Polynomial::constant(const mpz_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t index, unsigned power) {
  Exponents e;
  e.e.at(index) = static_cast<std::uint16_t>(power);
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& exps, const mpz_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({exps, c});
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Exponents Polynomial::min_exponents() const {
  Exponents m;
  if (terms_.empty()) return m;
  m = terms_.front().exps;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxSymbols; ++i) m.e[i] = std::min(m.e[i], t.exps.e[i]);
  }
  return m;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exps.e[var]);
  return d;
}

int Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().exps.degree(); }

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    const auto k = s.exps.e[var];
    s.exps.e[var] = 0;
    out[k].terms_.push_back(std::move(s));
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
      continue;
    }
    const int c = compare_grlex(terms_[i].exps, o.terms_[j].exps);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpz_class s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  if (is_zero() || o.is_zero()) return r;
  if (o.is_monomial() && o.leading().exps.degree() == 0) return scaled(o.leading().coeff);
  if (is_monomial() && leading().exps.degree() == 0) return o.scaled(leading().coeff);
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      r.terms_.push_back({add_exps(a.exps, b.exps), a.coeff * b.coeff});
    }
  }
  r.canonicalize();
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Exponents& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.exps = add_exps(t.exps, m);
  return r;
}

Polynomial Polynomial::divided_by_monomial(const Exponents& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    if (!m.divides(t.exps)) throw std::logic_error("monomial does not divide polynomial");
    t.exps = sub_exps(t.exps, m);
  }
  return r;
}

Polynomial Polynomial::divided_by_integer(const mpz_class& c) const {
  if (c == 1) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw std::logic_error("integer does not divide polynomial");
    }
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (d.is_monomial()) {
    const auto& lt = d.leading();
    for (const auto& t : terms_) {
      if (!lt.exps.divides(t.exps) || !mpz_divisible_p(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t())) {
        return std::nullopt;
      }
    }
    Polynomial r = divided_by_monomial(lt.exps);
    for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
    return r;
  }
  Polynomial quotient;
  Polynomial rem = *this;
  const auto& lt = d.leading();
  while (!rem.is_zero()) {
    const auto& rt = rem.leading();
    if (!lt.exps.divides(rt.exps) || !mpz_divisible_p(rt.coeff.get_mpz_t(), lt.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rt.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
    const Exponents e = sub_exps(rt.exps, lt.exps);
    quotient.terms_.push_back({e, c});
    rem = rem - d.times_monomial(e).scaled(c);
  }
  return quotient;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  if (!uses(var)) return *this;
  const auto coeffs = coefficients_in(var);
  // Horner in `value`.
  Polynomial r = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    r = r * value + coeffs[k];
  }
  return r;
}

Polynomial Polynomial::permuted(const std::array<std::size_t, kMaxSymbols>& perm) const {
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s{Exponents{}, t.coeff};
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (t.exps.e[i] != 0) s.exps.e[perm[i]] = t.exps.e[i];
    }
    r.terms_.push_back(std::move(s));
  }
  r.canonicalize();
  return r;
}

double Polynomial::eval(std::span<const double> values) const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.get_d();
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (t.exps.e[i] != 0) v *= std::pow(values[i], static_cast<int>(t.exps.e[i]));
    }
    acc += v;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].exps == o.terms_[i].exps) || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string format_monomial(std::span<const int> exps, const SymbolSet& symbols) {
  std::string out;
  for (std::size_t i = 0; i < exps.size() && i < symbols.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += symbols.name(i);
    if (exps[i] != 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

std::string Polynomial::to_string(const SymbolSet& symbols) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::array<int, kMaxSymbols> ex{};
    for (std::size_t i = 0; i < kMaxSymbols; ++i) ex[i] = t.exps.e[i];
    const std::string mono = format_monomial(ex, symbols);
    mpz_class mag = abs(t.coeff);
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GCD

namespace {

Polynomial normalize_sign(Polynomial p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

std::uint32_t used_vars(const Polynomial& p) {
  std::uint32_t mask = 0;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (t.exps.e[i] != 0) mask |= (1U << i);
    }
  }
  return mask;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p with respect to var.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Polynomial lcb = b.coefficients_in(var).back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    const Polynomial lcr = r.coefficients_in(var).back();
    Exponents shift;
    shift.e[var] = static_cast<std::uint16_t>(dr - db);
    r = lcb * r - lcr * b.times_monomial(shift);
  }
  return r;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  const Polynomial c = content_in(p, var);
  auto q = p.divide_exact(c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return normalize_sign(*q);
}

Polynomial gcd_primitive(Polynomial a, Polynomial b) {
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(1);
  const std::uint32_t ua = used_vars(a);
  const std::uint32_t ub = used_vars(b);
  if (ua != ub) {
    // A variable missing from one side: the gcd divides every coefficient
    // of the other side with respect to that variable.
    const std::uint32_t only_a = ua & ~ub;
    if (only_a != 0) {
      const std::size_t v = static_cast<std::size_t>(__builtin_ctz(only_a));
      Polynomial g = b;
      for (const auto& c : a.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant()) return Polynomial::constant(1);
      }
      return g;
    }
    std::swap(a, b);
    return gcd_primitive(std::move(a), std::move(b));
  }
  std::size_t var = 0;
  int best = -1;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    if ((ua & (1U << i)) == 0) continue;
    const int d = std::max(a.degree_in(i), b.degree_in(i));
    if (best < 0 || d < best) {
      best = d;
      var = i;
    }
  }
  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial gc = gcd_impl(ca, cb);
  Polynomial pa = normalize_sign(*a.divide_exact(ca));
  Polynomial pb = normalize_sign(*b.divide_exact(cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  Polynomial pp;
  while (true) {
    if (pb.degree_in(var) == 0) {
      pp = Polynomial::constant(1);
      break;
    }
    Polynomial r = prem(pa, pb, var);
    if (r.is_zero()) {
      pp = pb;
      break;
    }
    if (r.degree_in(var) == 0) {
      pp = Polynomial::constant(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, var);
  }
  return normalize_sign(gc * pp);
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const Exponents ma = a.min_exponents();
  const Exponents mb = b.min_exponents();
  Exponents gm;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) gm.e[i] = std::min(ma.e[i], mb.e[i]);
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  mpz_class gi;
  mpz_gcd(gi.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_monomial() || b.is_monomial()) return Polynomial::monomial(gm, gi);
  const Polynomial pa = a.divided_by_monomial(ma).divided_by_integer(ca);
  const Polynomial pb = b.divided_by_monomial(mb).divided_by_integer(cb);
  Polynomial g = gcd_primitive(pa, pb);
  return normalize_sign(g.times_monomial(gm).scaled(gi));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_impl(a, b); }

}  // namespace glpq
