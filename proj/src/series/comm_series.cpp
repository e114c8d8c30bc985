#include "glpq/series/comm_series.hpp"

#include <climits>
#include <cmath>
#include <stdexcept>
#include <string>

#include "glpq/coeff/errors.hpp"

namespace glpq {

int term_weight(int degree, const TruncLaurent& c) {
  const int v = c.valuation();
  if (v > INT_MAX - degree) return INT_MAX;
  return degree + v;
}

bool weight_filter(int degree, TruncLaurent& c, int max_weight) {
  if (term_weight(degree, c) > max_weight) return false;
  const int need = max_weight - degree + 1;
  if (c.precision() < need) {
    throw TruncationUnderflow("coefficient of a degree-" + std::to_string(degree) + " term known only below t^" +
                              std::to_string(c.precision()) + ", need t^" + std::to_string(need));
  }
  c = c.with_precision_cap(need);
  return !c.is_zero();
}

CommSeries2 CommSeries2::constant(const TruncLaurent& c, int max_weight) {
  CommSeries2 r(max_weight);
  r.add_term({0, 0}, c);
  return r;
}

CommSeries2 CommSeries2::var_A(int max_weight, int order) {
  CommSeries2 r(max_weight);
  r.add_term({1, 0}, TruncLaurent::constant(1, order));
  return r;
}

CommSeries2 CommSeries2::var_D(int max_weight, int order) {
  CommSeries2 r(max_weight);
  r.add_term({0, 1}, TruncLaurent::constant(1, order));
  return r;
}

void CommSeries2::add_term(Key k, TruncLaurent c) {
  const auto it = terms_.find(k);
  if (it != terms_.end()) {
    c = it->second + c;
    terms_.erase(it);
  }
  if (weight_filter(k.first + k.second, c, max_weight_)) terms_.emplace(k, std::move(c));
}

TruncLaurent CommSeries2::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? TruncLaurent::constant(0) : it->second;
}

int CommSeries2::min_weight() const {
  int w = max_weight_ + 1;
  for (const auto& [k, c] : terms_) w = std::min(w, term_weight(k.first + k.second, c));
  return w;
}

CommSeries2 CommSeries2::operator+(const CommSeries2& o) const {
  if (o.max_weight_ != max_weight_) throw std::logic_error("series with different truncation");
  CommSeries2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

CommSeries2 CommSeries2::operator-() const {
  CommSeries2 r(max_weight_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

CommSeries2 CommSeries2::operator-(const CommSeries2& o) const { return *this + (-o); }

CommSeries2 CommSeries2::operator*(const CommSeries2& o) const {
  if (o.max_weight_ != max_weight_) throw std::logic_error("series with different truncation");
  CommSeries2 r(max_weight_);
  for (const auto& [k1, c1] : terms_) {
    const int w1 = term_weight(k1.first + k1.second, c1);
    for (const auto& [k2, c2] : o.terms_) {
      if (w1 + term_weight(k2.first + k2.second, c2) > max_weight_) continue;
      r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    }
  }
  return r;
}

CommSeries2 CommSeries2::scaled(const TruncLaurent& c) const {
  CommSeries2 r(max_weight_);
  for (const auto& [k, x] : terms_) r.add_term(k, c * x);
  return r;
}

CommSeries2 CommSeries2::pow(unsigned n) const {
  CommSeries2 r = constant(TruncLaurent::constant(1), max_weight_);
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

long double CommSeries2::eval(long double a, long double d, long double t) const {
  long double s = 0.0L;
  for (const auto& [k, c] : terms_) {
    long double ct = 0.0L;
    for (int e = c.valuation(); e < c.valuation() + 64 && e <= c.order(); ++e) {
      const mpq_class x = c.coeff(e);
      if (x == 0) continue;
      ct += static_cast<long double>(x.get_num().get_d()) / static_cast<long double>(x.get_den().get_d()) *
            std::pow(t, static_cast<long double>(e));
    }
    s += ct * std::pow(a, static_cast<long double>(k.first)) * std::pow(d, static_cast<long double>(k.second));
  }
  return s;
}

CommSeries2 complete_homogeneous(const std::vector<CommSeries2>& nodes, int m) {
  if (nodes.empty()) throw std::logic_error("no nodes");
  const int w = nodes.front().max_weight();
  if (m < 0) return CommSeries2(w);
  if (nodes.size() == 1) return nodes.front().pow(static_cast<unsigned>(m));
  const std::vector<CommSeries2> rest(nodes.begin() + 1, nodes.end());
  CommSeries2 r(w);
  CommSeries2 power = CommSeries2::constant(TruncLaurent::constant(1), w);
  for (int i = 0; i <= m; ++i) {
    r = r + power * complete_homogeneous(rest, m - i);
    power = power * nodes.front();
  }
  return r;
}

CommSeries2 log_divided_difference(const std::vector<CommSeries2>& nodes) {
  if (nodes.empty()) throw std::logic_error("no nodes");
  const int w = nodes.front().max_weight();
  for (const auto& x : nodes) {
    if (x.min_weight() < 1) throw std::logic_error("divided difference nodes must have positive weight");
  }
  const int k = static_cast<int>(nodes.size());
  CommSeries2 r(w);
  // h_m has weight >= m, so n - k + 1 <= w bounds the sum.
  for (int n = std::max(1, k - 1); n - k + 1 <= w; ++n) {
    const mpq_class c(n % 2 == 1 ? 1 : -1, n);
    r = r + complete_homogeneous(nodes, n - k + 1).scaled(TruncLaurent::constant(c));
  }
  return r;
}

}  // namespace glpq
