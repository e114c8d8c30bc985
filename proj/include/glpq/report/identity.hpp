#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glpq/coeff/ratfunc.hpp"
#include "glpq/coeff/real.hpp"
#include "glpq/nc/element.hpp"
#include "glpq/report/report.hpp"
#include "glpq/report/spotcheck.hpp"

namespace glpq {

/// A claimed identity: every (lhs, rhs) pair produced by `sides` must agree.
/// Matrix identities yield one pair per entry.
template <Scalar S>
struct Identity {
  std::string id;
  std::string anchor;
  std::function<std::vector<std::pair<Element<S>, Element<S>>>()> sides;
};

/// Exact check: passes iff every difference is the zero Element; the
/// witness is the first nonzero difference.
template <Scalar S>
CheckTask exact_task(Identity<S> idn) {
  auto sides = idn.sides;
  return {idn.id, idn.anchor, [sides]() -> std::optional<std::string> {
            for (const auto& [l, r] : sides()) {
              const Element<S> diff = l - r;
              if (!diff.is_zero()) return diff.to_string();
            }
            return std::nullopt;
          }};
}

template <Scalar S>
std::vector<CheckTask> exact_tasks(const std::vector<Identity<S>>& ids) {
  std::vector<CheckTask> out;
  out.reserve(ids.size());
  for (const auto& i : ids) out.push_back(exact_task(i));
  return out;
}

/// |x - y| / max(1, |x|, |y|): relative for large values, absolute near zero.
inline double scaled_deviation(long double x, long double y) {
  return static_cast<double>(std::abs(x - y) / std::max({1.0L, std::abs(x), std::abs(y)}));
}

/// Largest coefficientwise scaled deviation between two floating Elements.
inline double element_deviation(const Element<Real>& x, const Element<Real>& y) {
  double dev = 0.0;
  for (const auto& [m, c] : x.terms()) dev = std::max(dev, scaled_deviation(c.value(), y.coefficient(m).value()));
  for (const auto& [m, c] : y.terms()) dev = std::max(dev, scaled_deviation(x.coefficient(m).value(), c.value()));
  return dev;
}

/// Evaluates every coefficient of an exact Element and places the result in
/// a floating presentation with the same generator layout.
inline Element<Real> evaluate_into(const Element<RatFunc>& e, const std::shared_ptr<const Presentation<Real>>& target,
                                   const std::map<std::string, double>& at, double eps) {
  TermMap<Real> t;
  for (const auto& [m, c] : e.terms()) t.emplace(m, Real(c.eval(at, eps)));
  return Element<Real>(target, std::move(t));
}

/// Numeric family over an identity list that exists both exactly and in
/// floating point. At each assignment a check's deviation is the worst of
/// (floating lhs vs floating rhs) and (evaluated exact side vs floating side).
inline NumericFamily identity_family(
    std::string suite, const std::vector<Identity<RatFunc>>& exact,
    std::function<std::vector<Identity<Real>>(const Assignment&)> floating,
    std::function<Assignment(std::mt19937_64&)> sample,
    std::function<std::optional<std::string>(const Assignment&)> guard, double eval_eps = 1e-12) {
  using Pairs = std::vector<std::pair<Element<RatFunc>, Element<RatFunc>>>;
  auto exact_sides = std::make_shared<std::vector<Pairs>>(exact.size());
  std::vector<std::string> exact_errors(exact.size());
  const long n = static_cast<long>(exact.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      (*exact_sides)[static_cast<std::size_t>(i)] = exact[static_cast<std::size_t>(i)].sides();
    } catch (const std::exception& e) {
      exact_errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  NumericFamily f;
  f.suite = std::move(suite);
  for (const auto& i : exact) f.checks.emplace_back(i.id, i.anchor);
  f.sample = std::move(sample);
  f.guard = std::move(guard);
  f.evaluate = [exact_sides, exact_errors, floating, eval_eps](const Assignment& at) {
    const std::vector<Identity<Real>> ids = floating(at);
    std::vector<std::optional<double>> out(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!exact_errors[i].empty()) {
        out[i] = NAN;
        continue;
      }
      try {
        const auto sides = ids[i].sides();
        const Pairs& ex = (*exact_sides)[i];
        if (sides.size() != ex.size()) throw std::logic_error("exact and floating identities disagree in shape");
        double dev = 0.0;
        for (std::size_t k = 0; k < sides.size(); ++k) {
          const auto& [l, r] = sides[k];
          const auto& target = l.presentation() ? l.presentation() : r.presentation();
          dev = std::max({dev, element_deviation(l, r), element_deviation(evaluate_into(ex[k].first, target, at, eval_eps), l),
                          element_deviation(evaluate_into(ex[k].second, target, at, eval_eps), r)});
        }
        out[i] = dev;
      } catch (const NearPoleEvaluation&) {
        out[i] = std::nullopt;
      } catch (const std::exception&) {
        out[i] = NAN;
      }
    }
    return out;
  };
  return f;
}

}  // namespace glpq
