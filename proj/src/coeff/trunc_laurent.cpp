#include "glpq/coeff/trunc_laurent.hpp"

#include <algorithm>
#include <cmath>

#include "glpq/coeff/errors.hpp"
#include "glpq/coeff/format.hpp"

namespace glpq {

namespace {

int sat_add(int a, int b) {
  if (a == TruncLaurent::kExact || b == TruncLaurent::kExact) return TruncLaurent::kExact;
  return a + b;
}

}  // namespace

TruncLaurent TruncLaurent::constant(const mpq_class& c, int order) { return monomial(c, 0, order); }

TruncLaurent TruncLaurent::monomial(const mpq_class& c, int k, int order) {
  TruncLaurent r(order);
  r.start_ = k;
  r.c_.push_back(c);
  r.normalize();
  return r;
}

TruncLaurent TruncLaurent::exp_series(const mpq_class& c, int order) {
  std::vector<mpq_class> coeffs;
  mpq_class term = 1;
  for (int n = 0; n <= order; ++n) {
    coeffs.push_back(term);
    term = term * c / (n + 1);
  }
  return from_coeffs(0, std::move(coeffs), order + 1, order);
}

TruncLaurent TruncLaurent::from_coeffs(int start, std::vector<mpq_class> coeffs, int precision, int order) {
  TruncLaurent r(order);
  r.start_ = start;
  r.c_ = std::move(coeffs);
  r.prec_ = precision;
  r.normalize();
  return r;
}

void TruncLaurent::normalize() {
  if (prec_ != kExact && prec_ > order_ + 1) prec_ = order_ + 1;
  int cap = std::min(prec_, order_ + 1);
  if (start_ + static_cast<int>(c_.size()) > cap) {
    const int keep = std::max(0, cap - start_);
    bool lost = false;
    for (std::size_t i = keep; i < c_.size(); ++i) {
      if (c_[i] != 0) lost = true;
    }
    c_.resize(keep);
    if (lost) prec_ = std::min(prec_, order_ + 1);
  }
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    start_ = 0;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    start_ += static_cast<int>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class TruncLaurent::coeff(int k) const {
  if (k < start_ || k >= start_ + static_cast<int>(c_.size())) return 0;
  return c_[k - start_];
}

TruncLaurent TruncLaurent::operator+(const TruncLaurent& o) const {
  TruncLaurent r(std::min(order_, o.order_));
  r.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return r;
  const int lo = c_.empty() ? o.start_ : (o.c_.empty() ? start_ : std::min(start_, o.start_));
  const int hi = std::max(start_ + static_cast<int>(c_.size()), o.start_ + static_cast<int>(o.c_.size()));
  const int end = std::min(hi, std::min(r.prec_, r.order_ + 1));
  r.start_ = lo;
  if (end > lo) {
    r.c_.resize(end - lo);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const int k = start_ + static_cast<int>(i);
      if (k < end) r.c_[k - lo] += c_[i];
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      const int k = o.start_ + static_cast<int>(i);
      if (k < end) r.c_[k - lo] += o.c_[i];
    }
  }
  r.normalize();
  return r;
}

TruncLaurent TruncLaurent::operator-() const {
  TruncLaurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncLaurent TruncLaurent::operator-(const TruncLaurent& o) const { return *this + (-o); }

TruncLaurent TruncLaurent::scaled(const mpq_class& c) const {
  TruncLaurent r = *this;
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

TruncLaurent TruncLaurent::operator*(const TruncLaurent& o) const {
  TruncLaurent r(std::min(order_, o.order_));
  r.prec_ = std::min(sat_add(prec_, o.valuation()), sat_add(o.prec_, valuation()));
  if (c_.empty() || o.c_.empty()) {
    r.normalize();
    return r;
  }
  r.start_ = start_ + o.start_;
  const int full = static_cast<int>(c_.size() + o.c_.size()) - 1;
  const int cap = std::min(r.prec_, r.order_ + 1);
  const int len = std::min(full, std::max(0, cap - r.start_));
  r.c_.resize(len);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      const int k = static_cast<int>(i + j);
      if (k >= len) break;
      r.c_[k] += c_[i] * o.c_[j];
    }
  }
  if (len < full && r.prec_ > cap) r.prec_ = cap;
  r.normalize();
  return r;
}

TruncLaurent TruncLaurent::inverse() const {
  if (c_.empty()) throw TruncationUnderflow("inverting a series with no known nonzero coefficient");
  const int v = start_;
  if (prec_ == kExact && c_.size() == 1) return monomial(1 / c_[0], -v, order_);
  const int rel = prec_ == kExact ? kExact : prec_ - v;
  int res_prec = rel == kExact ? order_ + 1 : std::min(rel - v, order_ + 1);
  const int n = res_prec + v;
  TruncLaurent r(order_);
  r.start_ = -v;
  r.prec_ = res_prec;
  if (n <= 0) {
    r.normalize();
    return r;
  }
  const mpq_class inv0 = 1 / c_[0];
  r.c_.resize(n);
  r.c_[0] = inv0;
  for (int k = 1; k < n; ++k) {
    mpq_class s = 0;
    const int lim = std::min(k, static_cast<int>(c_.size()) - 1);
    for (int j = 1; j <= lim; ++j) s += c_[j] * r.c_[k - j];
    r.c_[k] = -inv0 * s;
  }
  r.normalize();
  return r;
}

TruncLaurent TruncLaurent::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  TruncLaurent result = constant(1, order_);
  TruncLaurent base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

TruncLaurent TruncLaurent::with_precision_cap(int p) const {
  TruncLaurent r = *this;
  r.prec_ = std::min(r.prec_, p);
  r.normalize();
  return r;
}

double TruncLaurent::eval(double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i].get_d() * std::pow(t, start_ + static_cast<int>(i));
  return s;
}

std::string TruncLaurent::to_string() const {
  std::vector<FormattedTerm> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const int k = start_ + static_cast<int>(i);
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    terms.push_back({c_[i], std::move(mono)});
  }
  return join_terms(terms);
}

}  // namespace glpq
