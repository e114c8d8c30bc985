#include "glpq/coeff/ratfunc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "glpq/coeff/errors.hpp"
#include "glpq/coeff/format.hpp"

namespace glpq {

std::string join_terms(const std::vector<FormattedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    const mpq_class mag = abs(t.coeff);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.mono;
    } else {
      out += mag.get_str() + "*" + t.mono;
    }
  }
  return out;
}

RatFunc RatFunc::constant(SymbolSetPtr symbols, const mpq_class& c) {
  mpq_class r = c;
  r.canonicalize();
  return RatFunc(std::move(symbols), Polynomial::constant(r.get_num()), Polynomial::constant(r.get_den()));
}

RatFunc RatFunc::symbol(SymbolSetPtr symbols, const std::string& name) {
  const auto idx = symbols->index_of(name);
  if (!idx) throw MissingSymbol(name);
  return RatFunc(std::move(symbols), Polynomial::variable(*idx), Polynomial::constant(1));
}

RatFunc RatFunc::from_polynomials(SymbolSetPtr symbols, Polynomial num, Polynomial den) {
  return reduce(std::move(symbols), std::move(num), std::move(den));
}

RatFunc RatFunc::reduce(SymbolSetPtr symbols, Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFunc(std::move(symbols), Polynomial{}, Polynomial::constant(1));
  if (!den.is_one()) {
    const Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
    if (den.leading().coeff < 0) {
      num = -num;
      den = -den;
    }
  }
  return RatFunc(std::move(symbols), std::move(num), std::move(den));
}

const SymbolSetPtr& RatFunc::common_symbols(const RatFunc& o) const {
  if (!symbols_) return o.symbols_;
  if (!o.symbols_) return symbols_;
  if (!symbols_->same_as(*o.symbols_)) throw SymbolSetMismatch();
  return symbols_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  const SymbolSetPtr& s = common_symbols(o);
  if (o.is_zero()) return RatFunc(s, num_, den_);
  if (is_zero()) return RatFunc(s, o.num_, o.den_);
  if (den_ == o.den_) {
    if (den_.is_one()) return RatFunc(s, num_ + o.num_, den_);
    return reduce(s, num_ + o.num_, den_);
  }
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial b1 = *den_.divide_exact(g);
  const Polynomial d1 = *o.den_.divide_exact(g);
  Polynomial t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return RatFunc(s);
  const Polynomial g2 = gcd(t, g);
  Polynomial num = *t.divide_exact(g2);
  Polynomial den = b1 * *o.den_.divide_exact(g2);
  if (den.leading().coeff < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc(s, std::move(num), std::move(den));
}

RatFunc RatFunc::operator-() const { return RatFunc(symbols_, -num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  const SymbolSetPtr& s = common_symbols(o);
  if (is_zero() || o.is_zero()) return RatFunc(s);
  if (den_.is_one() && o.den_.is_one()) return RatFunc(s, num_ * o.num_, den_);
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  Polynomial num = *num_.divide_exact(g1) * *o.num_.divide_exact(g2);
  Polynomial den = *den_.divide_exact(g2) * *o.den_.divide_exact(g1);
  if (den.leading().coeff < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc(s, std::move(num), std::move(den));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Polynomial num = den_;
  Polynomial den = num_;
  if (den.leading().coeff < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc(symbols_, std::move(num), std::move(den));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return *this * o.inverse();
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  // Powers of coprime polynomials stay coprime.
  return RatFunc(symbols_, num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (symbols_ && o.symbols_ && !symbols_->same_as(*o.symbols_)) return false;
  return num_ == o.num_ && den_ == o.den_;
}

double RatFunc::eval(const std::map<std::string, double>& assignment, double eps) const {
  std::array<double, kMaxSymbols> values{};
  if (symbols_) {
    std::uint32_t used = 0;
    for (const auto* p : {&num_, &den_}) {
      for (const auto& t : p->terms()) {
        for (std::size_t i = 0; i < kMaxSymbols; ++i) {
          if (t.exps.e[i] != 0) used |= (1U << i);
        }
      }
    }
    for (std::size_t i = 0; i < symbols_->size(); ++i) {
      if ((used & (1U << i)) == 0) continue;
      const auto it = assignment.find(symbols_->name(i));
      if (it == assignment.end()) throw MissingSymbol(symbols_->name(i));
      values[i] = it->second;
    }
  }
  const double d = den_.eval(values);
  if (!(std::abs(d) > eps)) throw NearPoleEvaluation("denominator " + std::to_string(d) + " too close to zero");
  return num_.eval(values) / d;
}

RatFunc RatFunc::substitute(const std::string& name, const RatFunc& value) const {
  const auto idx = symbols_ ? symbols_->index_of(name) : std::nullopt;
  if (!idx) throw MissingSymbol(name);
  // Horner over the coefficients of num and den with respect to the symbol.
  auto eval_poly = [&](const Polynomial& p) {
    const auto coeffs = p.coefficients_in(*idx);
    RatFunc r = RatFunc::from_polynomials(symbols_, coeffs.back(), Polynomial::constant(1));
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
      r = r * value + RatFunc::from_polynomials(symbols_, coeffs[k], Polynomial::constant(1));
    }
    return r;
  };
  return eval_poly(num_) / eval_poly(den_);
}

RatFunc RatFunc::translated(const std::map<std::string, Polynomial>& offsets) const {
  Polynomial num = num_;
  Polynomial den = den_;
  for (const auto& [name, offset] : offsets) {
    const auto idx = symbols_ ? symbols_->index_of(name) : std::nullopt;
    if (!idx) throw MissingSymbol(name);
    const Polynomial value = Polynomial::variable(*idx) + offset;
    num = num.substitute(*idx, value);
    den = den.substitute(*idx, value);
  }
  if (den.leading().coeff < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc(symbols_, std::move(num), std::move(den));
}

RatFunc RatFunc::renamed(const std::map<std::string, std::string>& swap) const {
  std::array<std::size_t, kMaxSymbols> perm{};
  for (std::size_t i = 0; i < kMaxSymbols; ++i) perm[i] = i;
  for (const auto& [from, to] : swap) {
    const auto a = symbols_->index_of(from);
    const auto b = symbols_->index_of(to);
    if (!a) throw MissingSymbol(from);
    if (!b) throw MissingSymbol(to);
    perm[*a] = *b;
  }
  Polynomial num = num_.permuted(perm);
  Polynomial den = den_.permuted(perm);
  if (den.leading().coeff < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc(symbols_, std::move(num), std::move(den));
}

namespace {

struct LaurentTerm {
  std::array<int, kMaxSymbols> exps{};
  mpq_class coeff;
};

bool laurent_greater(const LaurentTerm& a, const LaurentTerm& b) {
  int da = 0;
  int db = 0;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    da += a.exps[i];
    db += b.exps[i];
  }
  if (da != db) return da > db;
  return a.exps > b.exps;
}

}  // namespace

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  static const SymbolSetPtr kNone = SymbolSet::make({});
  const SymbolSet& names = symbols_ ? *symbols_ : *kNone;
  if (den_.is_monomial()) {
    const auto& d = den_.leading();
    std::vector<LaurentTerm> terms;
    for (const auto& t : num_.terms()) {
      LaurentTerm lt;
      for (std::size_t i = 0; i < kMaxSymbols; ++i) lt.exps[i] = t.exps.e[i] - d.exps.e[i];
      lt.coeff = mpq_class(t.coeff, d.coeff);
      lt.coeff.canonicalize();
      terms.push_back(std::move(lt));
    }
    std::sort(terms.begin(), terms.end(), laurent_greater);
    std::vector<FormattedTerm> out;
    for (const auto& t : terms) out.push_back({t.coeff, format_monomial(t.exps, names)});
    return join_terms(out);
  }
  return "(" + num_.to_string(names) + ")*(" + den_.to_string(names) + ")^-1";
}

}  // namespace glpq
