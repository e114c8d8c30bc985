#include "glpq/mside/mcoefficient.hpp"

#include <cmath>
#include <vector>

#include "glpq/coeff/errors.hpp"
#include "glpq/nc/element.hpp"

namespace glpq {

namespace {

RatFunc rf(const std::string& name) { return RatFunc::symbol(MCoefficient::symbols(), name); }
RatFunc rc(const mpq_class& c) { return RatFunc::constant(MCoefficient::symbols(), c); }

std::string e_monomial(int k, int l) {
  std::string s;
  auto add = [&s](const std::string& name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += e == 1 ? name : name + "^" + std::to_string(e);
  };
  add("E1", k);
  add("E2", l);
  return s;
}

}  // namespace

const SymbolSetPtr& MCoefficient::symbols() {
  static const SymbolSetPtr s = SymbolSet::make({"p", "q", "phi", "x", "y"});
  return s;
}

void MCoefficient::add_term(const Key& k, const RatFunc& r) {
  if (r.is_zero()) return;
  const auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, r);
    return;
  }
  it->second += r;
  if (it->second.is_zero()) terms_.erase(it);
}

MCoefficient MCoefficient::constant(const mpq_class& c) { return from_ratfunc(rc(c)); }

MCoefficient MCoefficient::from_ratfunc(const RatFunc& r, int k, int l) {
  MCoefficient m;
  m.add_term({k, l}, r.symbols() ? r : rc(0) + r);
  return m;
}

MCoefficient MCoefficient::symbol(const std::string& name) {
  if (name == "E1") return from_ratfunc(rc(1), 1, 0);
  if (name == "E2") return from_ratfunc(rc(1), 0, 1);
  if (name == "psi") return from_ratfunc(rc(2) - rf("phi"));
  if (!symbols()->index_of(name)) throw MissingSymbol(name);
  return from_ratfunc(rf(name));
}

RatFunc MCoefficient::plain_part() const {
  const auto it = terms_.find({0, 0});
  return it == terms_.end() ? rc(0) : it->second;
}

bool MCoefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second.is_one();
}

MCoefficient MCoefficient::operator+(const MCoefficient& o) const {
  MCoefficient r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

MCoefficient MCoefficient::operator-() const {
  MCoefficient r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

MCoefficient MCoefficient::operator-(const MCoefficient& o) const { return *this + (-o); }

MCoefficient MCoefficient::operator*(const MCoefficient& o) const {
  MCoefficient r;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  }
  return r;
}

MCoefficient MCoefficient::scaled(const RatFunc& s) const {
  MCoefficient r;
  for (const auto& [k, c] : terms_) r.add_term(k, c * s);
  return r;
}

MCoefficient MCoefficient::inverse() const {
  if (terms_.size() != 1) throw NotAUnit("coefficient is not a single E-term: " + to_string());
  const auto& [k, c] = *terms_.begin();
  return from_ratfunc(c.inverse(), -k.first, -k.second);
}

MCoefficient MCoefficient::pow(int n) const {
  const MCoefficient base = n < 0 ? inverse() : *this;
  MCoefficient r = constant(1);
  for (int i = 0; i < (n < 0 ? -n : n); ++i) r = r * base;
  return r;
}

MCoefficient MCoefficient::shifted(bool mu, int sign) const {
  const SymbolSetPtr& s = symbols();
  const std::size_t phi = *s->index_of("phi");
  // Offset phi for mu, psi = 2 - phi for nu, with the given sign.
  Polynomial offset = mu ? Polynomial::variable(phi) : Polynomial::constant(2) - Polynomial::variable(phi);
  if (sign < 0) offset = -offset;
  const std::map<std::string, Polynomial> offsets{{"x", offset}, {"y", offset}};
  const RatFunc factor = rf(mu ? "q" : "p");
  const RatFunc factor_inv = factor.inverse();
  MCoefficient r;
  for (const auto& [k, c] : terms_) {
    const int e = sign * (k.first + k.second);
    RatFunc scale = rc(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) scale *= e < 0 ? factor_inv : factor;
    r.add_term(k, c.translated(offsets) * scale);
  }
  return r;
}

MCoefficient MCoefficient::shift_mu_inverse() const { return shifted(true, -1); }
MCoefficient MCoefficient::shift_nu_inverse() const { return shifted(false, -1); }
MCoefficient MCoefficient::shift_mu() const { return shifted(true, 1); }
MCoefficient MCoefficient::shift_nu() const { return shifted(false, 1); }

MCoefficient MCoefficient::tau() const {
  const RatFunc psi = rc(2) - rf("phi");
  MCoefficient r;
  for (const auto& [k, c] : terms_) {
    r.add_term({k.second, k.first}, c.renamed({{"x", "y"}, {"y", "x"}, {"p", "q"}, {"q", "p"}}).substitute("phi", psi));
  }
  return r;
}

double MCoefficient::eval(const std::map<std::string, double>& at, double eps) const {
  const auto get = [&at](const char* name) {
    const auto it = at.find(name);
    if (it == at.end()) throw MissingSymbol(name);
    return it->second;
  };
  const double e1 = terms_.empty() ? 1.0 : get("E1");
  const double e2 = terms_.empty() ? 1.0 : get("E2");
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += c.eval(at, eps) * std::pow(e1, k.first) * std::pow(e2, k.second);
  return s;
}

std::string MCoefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Higher E-degree first, mirroring the descending order of the RatFunc printer.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const std::string mono = e_monomial(k.first, k.second);
    const std::string cs = c.to_string();
    std::string term;
    if (mono.empty()) {
      term = has_top_level_sum(cs) && terms_.size() > 1 ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else if (has_top_level_sum(cs)) {
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

}  // namespace glpq
