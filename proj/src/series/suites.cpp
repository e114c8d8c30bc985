#include "glpq/series/suites.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <optional>

namespace glpq {

namespace {

using Sides = std::vector<std::pair<SeriesElement, SeriesElement>>;

/// ln T and the closed-form h*M of one ray, computed once and shared by the
/// checks of that ray.
struct RayData {
  explicit RayData(const SeriesAlgebra& alg) : s(alg) {}
  SeriesAlgebra s;
  std::once_flag once;
  std::optional<SeriesMatrix> log;
  std::optional<SeriesMatrix> closed;
  const SeriesMatrix& L() const { return *log; }
  const SeriesMatrix& H() const { return *closed; }

  void ensure() {
    std::call_once(once, [this] {
      log = s.log_T();
      closed = s.hm_closed();
    });
  }
};

Sides entrywise(const SeriesMatrix& x, const SeriesMatrix& y) {
  return {{x.a11(), y.a11()}, {x.a12(), y.a12()}, {x.a21(), y.a21()}, {x.a22(), y.a22()}};
}

}  // namespace

std::vector<Identity<TruncLaurent>> series_identities(const SeriesAlgebra& alg) {
  auto ray = std::make_shared<RayData>(alg);
  const std::string pre = "ray" + alg.config().ray_label() + "/";
  std::vector<Identity<TruncLaurent>> out;
  auto add = [&](const std::string& id, const std::string& anchor, std::function<Sides(RayData&)> f) {
    out.push_back({pre + id, anchor, [ray, f]() {
                     ray->ensure();
                     return f(*ray);
                   }});
  };
  using E = SeriesElement;

  add("log_closed_forms", "entries of M in terms of T", [](RayData& r) { return entrywise(r.L(), r.H()); });
  for (int n = 1; n <= alg.config().N; ++n) {
    add("t_minus_i_power[" + std::to_string(n) + "]", "closed form of (T - I)^n", [n](RayData& r) {
      SeriesMatrix x = r.s.identity();
      for (int k = 0; k < n; ++k) x = x * (r.s.T() - r.s.identity());
      return entrywise(x, r.s.closed_t_minus_i_power(n));
    });
  }

  const std::string rel = "relations of M";
  add("x_mu", rel, [](RayData& r) {
    return Sides{{commutator(r.L().a11(), r.L().a12()), r.L().a12().scaled(r.s.h1())}};
  });
  add("y_mu", rel, [](RayData& r) {
    return Sides{{commutator(r.L().a22(), r.L().a12()), r.L().a12().scaled(r.s.h1())}};
  });
  add("x_nu", rel, [](RayData& r) {
    return Sides{{commutator(r.L().a11(), r.L().a21()), r.L().a21().scaled(r.s.h2())}};
  });
  add("y_nu", rel, [](RayData& r) {
    return Sides{{commutator(r.L().a22(), r.L().a21()), r.L().a21().scaled(r.s.h2())}};
  });
  add("mu_squared", rel, [](RayData& r) { return Sides{{r.L().a12() * r.L().a12(), r.s.zero()}}; });
  add("nu_squared", rel, [](RayData& r) { return Sides{{r.L().a21() * r.L().a21(), r.s.zero()}}; });
  add("x_y", rel, [](RayData& r) { return Sides{{commutator(r.L().a11(), r.L().a22()), r.s.zero()}}; });
  add("mu_nu", rel, [](RayData& r) { return Sides{{anticommutator(r.L().a12(), r.L().a21()), r.s.zero()}}; });

  if (alg.config().alpha == alg.config().beta) {
    // With h1 = h2 every bracket coefficient 2h_i/(h1 + h2) is 1: [x, mu] = mu
    // and so on, i.e. [Lx, Lmu] = h Lmu.
    const std::string one_param = "equal-parameter specialization";
    add("one_parameter[x_mu]", one_param, [](RayData& r) {
      return Sides{{commutator(r.L().a11(), r.L().a12()), r.L().a12().scaled(r.s.h())}};
    });
    add("one_parameter[y_mu]", one_param, [](RayData& r) {
      return Sides{{commutator(r.L().a22(), r.L().a12()), r.L().a12().scaled(r.s.h())}};
    });
    add("one_parameter[x_nu]", one_param, [](RayData& r) {
      return Sides{{commutator(r.L().a11(), r.L().a21()), r.L().a21().scaled(r.s.h())}};
    });
    add("one_parameter[y_nu]", one_param, [](RayData& r) {
      return Sides{{commutator(r.L().a22(), r.L().a21()), r.L().a21().scaled(r.s.h())}};
    });
  }

  // X = [ln a, ln d], Y = [ln a, f_p gamma beta], Z = [ln d, f_q beta gamma].
  struct Xyz {
    E X, Y, Z, core;
    TruncLaurent pq, ln_pq;
  };
  auto xyz = [](RayData& r) {
    const SeriesAlgebra& s = r.s;
    const E ln_a = s.log_one_plus(s.A());
    const E ln_d = s.log_one_plus(s.D());
    const E fp = s.from_comm(s.f_p()) * s.gamma() * s.beta();
    const E fq = s.from_comm(s.f_q()) * s.beta() * s.gamma();
    const E core = s.gamma() * s.inverse_one_plus(s.A()) * s.beta() * s.inverse_one_plus(s.D());
    const mpq_class ab = s.config().alpha + s.config().beta;
    return Xyz{commutator(ln_a, ln_d),  commutator(ln_a, fp),
               commutator(ln_d, fq),    core,
               s.p() * s.q(),           TruncLaurent::monomial(ab, 1, s.config().K)};
  };
  add("y_minus_z", "Y - Z = 4h^2/(1 - pq) gamma a^-1 beta d^-1", [xyz](RayData& r) {
    const Xyz v = xyz(r);
    const TruncLaurent c = r.s.h() * r.s.h() * r.s.c(4) * (r.s.c(1) - v.pq).inverse();
    return Sides{{v.Y - v.Z, v.core.scaled(c)}};
  });
  add("x_bracket", "X = ln^2(pq)/(pq - 1) gamma a^-1 beta d^-1", [xyz](RayData& r) {
    const Xyz v = xyz(r);
    const TruncLaurent c = v.ln_pq * v.ln_pq * (v.pq - r.s.c(1)).inverse();
    return Sides{{v.X, v.core.scaled(c)}};
  });
  add("x_plus_y_minus_z", "X + Y - Z = 0", [xyz](RayData& r) {
    const Xyz v = xyz(r);
    return Sides{{v.X + v.Y - v.Z, r.s.zero()}};
  });

  const std::string log_br = "brackets of ln a, ln d with beta, gamma";
  add("ln_a_beta", log_br, [](RayData& r) {
    const SeriesAlgebra& s = r.s;
    return Sides{{commutator(s.log_one_plus(s.A()), s.beta()), s.beta().scaled(s.h1())}};
  });
  add("ln_d_beta", log_br, [](RayData& r) {
    const SeriesAlgebra& s = r.s;
    return Sides{{commutator(s.log_one_plus(s.D()), s.beta()), s.beta().scaled(s.h1())}};
  });
  add("ln_a_gamma", log_br, [](RayData& r) {
    const SeriesAlgebra& s = r.s;
    return Sides{{commutator(s.log_one_plus(s.A()), s.gamma()), s.gamma().scaled(s.h2())}};
  });
  add("ln_d_gamma", log_br, [](RayData& r) {
    const SeriesAlgebra& s = r.s;
    return Sides{{commutator(s.log_one_plus(s.D()), s.gamma()), s.gamma().scaled(s.h2())}};
  });

  const std::vector<std::pair<std::string, int>> entries = {{"x", 0}, {"mu", 1}, {"nu", 2}, {"y", 3}};
  for (const auto& [name, idx] : entries) {
    add("supertrace_central[" + name + "]", "str M = x - y is central", [idx](RayData& r) {
      const E str = r.L().a11() - r.L().a22();
      const E& g = r.L()(idx / 2, idx % 2);
      return Sides{{commutator(str, g), r.s.zero()}};
    });
  }

  add("exp_log", "T = exp(hM) with hM = ln T", [](RayData& r) { return entrywise(r.s.matrix_exp(r.L()), r.s.T()); });
  add("exp_closed", "T = exp(hM) with hM from the closed forms",
      [](RayData& r) { return entrywise(r.s.matrix_exp(r.H()), r.s.T()); });
  return out;
}

namespace {

SeriesConfig ray_config(const SeriesParams& p, const std::pair<mpq_class, mpq_class>& ray) {
  SeriesConfig c;
  c.N = p.N;
  c.K = p.K;
  c.alpha = ray.first;
  c.beta = ray.second;
  c.validate();
  return c;
}

nlohmann::ordered_json series_params_json(const SeriesParams& p) {
  nlohmann::ordered_json j;
  j["N"] = p.N;
  j["K"] = p.K;
  j["rays"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : p.rays) j["rays"].push_back(a.get_str() + "," + b.get_str());
  return j;
}

long double to_ld(const mpq_class& x) {
  return static_cast<long double>(x.get_num().get_d()) / static_cast<long double>(x.get_den().get_d());
}

}  // namespace

Report verify_series(const SeriesParams& params, ExecMode mode) {
  std::vector<CheckTask> tasks;
  for (const auto& ray : params.rays) {
    const SeriesAlgebra s(ray_config(params, ray));
    for (auto& t : exact_tasks(series_identities(s))) tasks.push_back(std::move(t));
  }
  return run_suite("series", series_params_json(params), tasks, mode);
}

NumericFamily series_family(const SeriesParams& params) {
  struct RayExact {
    SeriesConfig cfg;
    std::vector<std::string> ids;
    std::vector<std::vector<std::pair<SeriesElement, SeriesElement>>> sides;
    std::vector<std::string> errors;
    CommSeries2 ln_a{0}, g_b{0}, g_c{0}, f_q{0}, f_p{0};
  };
  auto rays = std::make_shared<std::vector<RayExact>>();
  NumericFamily f;
  f.suite = "series";
  for (const auto& ray : params.rays) {
    const SeriesAlgebra s(ray_config(params, ray));
    RayExact re{s.config(), {}, {}, {}, s.ln_a(), s.g_beta(), s.g_gamma(), s.f_q(), s.f_p()};
    const auto ids = series_identities(s);
    re.sides.resize(ids.size());
    re.errors.resize(ids.size());
    const long n = static_cast<long>(ids.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        re.sides[static_cast<std::size_t>(i)] = ids[static_cast<std::size_t>(i)].sides();
      } catch (const std::exception& e) {
        re.errors[static_cast<std::size_t>(i)] = e.what();
      }
    }
    for (const auto& i : ids) {
      f.checks.emplace_back(i.id, i.anchor);
      re.ids.push_back(i.id);
    }
    f.checks.emplace_back("ray" + s.config().ray_label() + "/closed_form_values",
                          "quotient formulas for ln a, g, f_q, f_p");
    rays->push_back(std::move(re));
  }

  f.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.001, 0.004);
    std::bernoulli_distribution neg(0.5);
    auto draw = [&] { return (neg(rng) ? -1.0 : 1.0) * mag(rng); };
    const double t = draw();
    const double A = draw();
    const double D = draw();
    return Assignment{{"t", t}, {"A", A}, {"D", D}};
  };
  // Each quotient formula divides by differences of nodes such as qa - d;
  // those must stay clear of zero on every ray.
  f.guard = [rays](const Assignment& at) -> std::optional<std::string> {
    const long double t = at.at("t");
    const long double a = 1 + static_cast<long double>(at.at("A"));
    const long double d = 1 + static_cast<long double>(at.at("D"));
    for (const RayExact& r : *rays) {
      const long double q = std::exp(to_ld(r.cfg.alpha) * t);
      const long double p = std::exp(to_ld(r.cfg.beta) * t);
      for (const long double den : {q * a - d, a / p - d, a - d / q, q - 1 / p, p * d - a, d / q - a, d - a / p,
                                    p - 1 / q}) {
        if (std::abs(den) < 2e-4L) return "node difference below 2e-4 on ray " + r.cfg.ray_label();
      }
    }
    return std::nullopt;
  };
  f.evaluate = [rays](const Assignment& at) {
    const long double t = at.at("t");
    const long double A = at.at("A");
    const long double D = at.at("D");
    std::vector<std::optional<double>> out;
    auto coeff_dev = [t](const SeriesElement& x, const SeriesElement& y) {
      double dev = 0;
      auto value = [t](const SeriesElement& e, const Monomial& m) {
        return static_cast<long double>(e.coefficient(m).eval(static_cast<double>(t)));
      };
      for (const auto& [m, c] : x.terms()) dev = std::max(dev, scaled_deviation(value(x, m), value(y, m)));
      for (const auto& [m, c] : y.terms()) dev = std::max(dev, scaled_deviation(value(x, m), value(y, m)));
      return dev;
    };
    for (const RayExact& r : *rays) {
      for (std::size_t i = 0; i < r.ids.size(); ++i) {
        if (!r.errors[i].empty()) {
          out.emplace_back(NAN);
          continue;
        }
        double dev = 0;
        for (const auto& [l, rr] : r.sides[i]) dev = std::max(dev, coeff_dev(l, rr));
        out.emplace_back(dev);
      }
      const long double q = std::exp(to_ld(r.cfg.alpha) * t);
      const long double p = std::exp(to_ld(r.cfg.beta) * t);
      const long double a = 1 + A;
      const long double d = 1 + D;
      const long double ln_a = std::log(a);
      const long double g_b = (std::log(a) - std::log(d / q)) / (a - d / q);
      const long double g_c = (std::log(d) - std::log(a / p)) / (d - a / p);
      const long double f_q = q * q / (q - 1 / p) *
                                  (std::log(a) / (a * (q * a - d)) - std::log(a / (p * q)) / (a * (a / p - d))) +
                              q * q * std::log(d / q) / ((a / p - d) * (q * a - d));
      const long double f_p = p * p / (p - 1 / q) *
                                  (std::log(d) / (d * (p * d - a)) - std::log(d / (p * q)) / (d * (d / q - a))) +
                              p * p * std::log(a / p) / ((d / q - a) * (p * d - a));
      double dev = 0;
      dev = std::max(dev, scaled_deviation(r.ln_a.eval(A, D, t), ln_a));
      dev = std::max(dev, scaled_deviation(r.g_b.eval(A, D, t), g_b));
      dev = std::max(dev, scaled_deviation(r.g_c.eval(A, D, t), g_c));
      dev = std::max(dev, scaled_deviation(r.f_q.eval(A, D, t), f_q));
      dev = std::max(dev, scaled_deviation(r.f_p.eval(A, D, t), f_p));
      out.emplace_back(dev);
    }
    return out;
  };
  return f;
}

}  // namespace glpq
