#include "glpq/mside/suites.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>

#include "glpq/nc/relations.hpp"

namespace glpq {

namespace {

using Pairs = std::vector<std::pair<MElement, MElement>>;

RatFunc r(const std::string& name) { return MCoefficient::symbol(name).plain_part(); }

bool matches(const MMatrix& a, const MMatrix& b) { return a == b; }

Pairs entrywise(const MMatrix& l, const MMatrix& rr) {
  Pairs out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.emplace_back(l(i, j), rr(i, j));
  }
  return out;
}

// Multiplies by the central denominator 2(s + phi)(s - psi), s = x - y, and
// insists that nothing but polynomials remain.
MElement cleared(const MSide& m, const MElement& e) {
  const RatFunc s = r("x") - r("y");
  const RatFunc den = RatFunc::constant(MCoefficient::symbols(), 2) * (s + r("phi")) * (s - r("psi"));
  const MElement out = m.scalar(MCoefficient::from_ratfunc(den)) * e;
  for (const auto& [mono, c] : out.terms()) {
    for (const auto& [k, f] : c.terms()) {
      if (!f.denominator().is_one()) throw std::runtime_error("not polynomial after clearing: " + f.to_string());
    }
  }
  return out;
}

std::string idx(const std::string& base, int n) { return base + "[" + std::to_string(n) + "]"; }

}  // namespace

std::string fn_reading(const MSide& m, int n_max) {
  bool right = true;
  bool left = true;
  for (int n = 1; n <= n_max; ++n) {
    const MMatrix it = m.m_power(n);
    right = right && matches(it, m.closed_power(n, FnPlacement::RightOfOdd));
    left = left && matches(it, m.closed_power(n, FnPlacement::LeftOfOdd));
  }
  if (right && left) return "both";
  if (right) return "right";
  if (left) return "left";
  return "neither";
}

std::vector<Identity<MCoefficient>> mside_identities(const MSide& m, int n_max) {
  std::vector<Identity<MCoefficient>> ids;
  const auto sp = std::make_shared<const MSide>(m);

  for (int n = 1; n <= n_max; ++n) {
    ids.push_back({idx("power_blocks", n), "block form of M^n with F_n, G_n right of the odd word", [sp, n] {
                     Pairs out;
                     for (const auto& [l, rr] : entrywise(sp->m_power(n), sp->closed_power(n, FnPlacement::RightOfOdd))) {
                       out.emplace_back(cleared(*sp, l), cleared(*sp, rr));
                     }
                     return out;
                   }});
    ids.push_back({idx("power_tau", n), "tau exchanges the diagonal and the off-diagonal blocks of M^n", [sp, n] {
                     const MMatrix x = sp->m_power(n);
                     const MMatrix t = sp->tau(x);
                     return Pairs{{t.a11(), x.a22()}, {t.a12(), x.a21()}, {t.a21(), x.a12()}, {t.a22(), x.a11()}};
                   }});
  }
  for (int a = 1; a < n_max; ++a) {
    for (int b = 1; a + b <= n_max; ++b) {
      ids.push_back({"power_additive[" + std::to_string(a) + "," + std::to_string(b) + "]", "M^(m+n) = M^m M^n",
                     [sp, a, b] { return entrywise(sp->m_power(a + b), sp->m_power(a) * sp->m_power(b)); }});
    }
  }

  const std::vector<std::pair<std::string, std::function<MElement(const MSide&)>>> gens = {
      {"x", [](const MSide& s) { return s.x(); }},
      {"y", [](const MSide& s) { return s.y(); }},
      {"mu", [](const MSide& s) { return s.mu(); }},
      {"nu", [](const MSide& s) { return s.nu(); }},
  };
  for (const auto& [name, g] : gens) {
    ids.push_back({"supertrace_central[" + name + "]", "str M = x - y is central", [sp, g = g] {
                     return Pairs{{commutator(sp->x() - sp->y(), g(*sp)), sp->zero()}};
                   }});
  }

  // The bracket relations, first on the generators and then on their tau
  // images; each relation is split into its two sides.
  const auto relation_sides = [](const MSide& s, const MElement& x, const MElement& y, const MElement& mu,
                                 const MElement& nu, const MElement& phi, const MElement& psi) {
    return std::vector<std::pair<MElement, MElement>>{
        {commutator(x, mu), phi * mu},  {commutator(y, mu), phi * mu}, {mu * mu, s.zero()},
        {commutator(x, nu), psi * nu},  {commutator(y, nu), psi * nu}, {nu * nu, s.zero()},
        {commutator(x, y), s.zero()},   {mu * nu, -(nu * mu)},
    };
  };
  const std::vector<std::string> relation_names = {"[x,mu]", "[y,mu]", "mu^2", "[x,nu]",
                                                   "[y,nu]", "nu^2",   "[x,y]", "mu*nu+nu*mu"};
  for (std::size_t i = 0; i < relation_names.size(); ++i) {
    ids.push_back({"relations[" + relation_names[i] + "]", "defining brackets of the exponential-parameter algebra",
                   [sp, i, relation_sides] {
                     const MSide& s = *sp;
                     return Pairs{relation_sides(s, s.x(), s.y(), s.mu(), s.nu(), s.sym("phi"), s.sym("psi"))[i]};
                   }});
    ids.push_back({"tau_relations[" + relation_names[i] + "]", "tau maps the defining brackets to defining brackets",
                   [sp, i, relation_sides] {
                     const MSide& s = *sp;
                     return Pairs{relation_sides(s, s.tau(s.x()), s.tau(s.y()), s.tau(s.mu()), s.tau(s.nu()),
                                                 s.tau(s.sym("phi")), s.tau(s.sym("psi")))[i]};
                   }});
  }

  ids.push_back({"tau_involution", "tau applied twice is the identity", [sp, n_max] {
                   Pairs out;
                   const MMatrix x = sp->m_power(n_max);
                   const MMatrix t = sp->build_T_from_M();
                   for (const MMatrix* mat : {&x, &t}) {
                     for (const auto& [l, rr] : entrywise(*mat, *mat)) out.emplace_back(sp->tau(sp->tau(l)), rr);
                   }
                   return out;
                 }});
  ids.push_back({"tau_multiplicative", "tau(u v) = tau(u) tau(v)", [sp] {
                   Pairs out;
                   const MMatrix x = sp->m_power(3);
                   const MMatrix t = sp->build_T_from_M();
                   const std::vector<MElement> els = {x.a11(), x.a12(), x.a21(), t.a11(), t.a12(), t.a21(), t.a22()};
                   for (const auto& u : els) {
                     for (const auto& v : els) out.emplace_back(sp->tau(u * v), sp->tau(u) * sp->tau(v));
                   }
                   return out;
                 }});
  ids.push_back({"reconstruction_tau", "tau exchanges a with d and beta with gamma in the reconstructed T", [sp] {
                   const MMatrix t = sp->build_T_from_M();
                   const MMatrix tt = sp->tau(t);
                   return Pairs{{tt.a11(), t.a22()}, {tt.a12(), t.a21()}};
                 }});

  const std::vector<std::string> rel = {"AB=QBA", "DB=QBD", "AC=PCA", "DC=PCD",
                                        "B^2=0",  "C^2=0",  "QBC+PCB=0", "[A,D]=(P-Q^-1)CB"};
  for (std::size_t i = 0; i < rel.size(); ++i) {
    ids.push_back({"reconstruction_relations[" + rel[i] + "]", "the matrix built from M satisfies the defining relations",
                   [sp, i] {
                     const MMatrix t = sp->build_T_from_M();
                     const MElement& A = t.a11();
                     const MElement& B = t.a12();
                     const MElement& C = t.a21();
                     const MElement& D = t.a22();
                     const MElement p = sp->sym("p");
                     const MElement q = sp->sym("q");
                     const MElement pqi = sp->scalar(MCoefficient::symbol("p") - MCoefficient::symbol("q").inverse());
                     const std::vector<std::pair<MElement, MElement>> sides = {
                         {A * B, q * B * A},         {D * B, q * B * D},       {A * C, p * C * A},
                         {D * C, p * C * D},         {B * B, sp->zero()},      {C * C, sp->zero()},
                         {q * B * C, -(p * C * B)},  {commutator(A, D), pqi * C * B},
                     };
                     return Pairs{sides[i]};
                   }});
  }
  ids.push_back({"sdet_exponential", "sdet of the reconstructed T equals e^{h str M} = E1 E2^-1", [sp] {
                   return Pairs{{superdeterminant(sp->build_T_from_M()),
                                 sp->sym("E1") * sp->scalar(MCoefficient::symbol("E2").inverse())}};
                 }});
  return ids;
}

Report verify_mside(int n_max, ExecMode mode) {
  if (n_max < 1) throw UnsupportedNegativeN();
  const MSide m;
  nlohmann::ordered_json j;
  j["n_max"] = n_max;
  j["fn_reading"] = fn_reading(m, n_max);
  return run_suite("mside", j, exact_tasks(mside_identities(m, n_max)), mode);
}

namespace {

// Floating route: an element is a function from a point to its four
// coefficients on 1, mu, nu, mu*nu. A product evaluates the right factor at
// the point moved by the inverse shifts of the left word, so no symbolic
// shifting is involved.
using Coeffs = std::array<double, 4>;
using NumElem = std::function<Coeffs(const Assignment&)>;

Assignment moved(Assignment at, int word) {
  const double phi = at.at("phi");
  const double psi = 2.0 - phi;
  if (word & 1) {
    at["x"] -= phi;
    at["y"] -= phi;
    at["E1"] /= at.at("q");
    at["E2"] /= at.at("q");
  }
  if (word & 2) {
    at["x"] -= psi;
    at["y"] -= psi;
    at["E1"] /= at.at("p");
    at["E2"] /= at.at("p");
  }
  return at;
}

NumElem num_scalar(std::function<double(const Assignment&)> f) {
  return [f](const Assignment& at) { return Coeffs{f(at), 0.0, 0.0, 0.0}; };
}
NumElem num_word(int word) {
  return [word](const Assignment&) {
    Coeffs c{};
    c[static_cast<std::size_t>(word)] = 1.0;
    return c;
  };
}
NumElem operator+(NumElem u, NumElem v) {
  return [u, v](const Assignment& at) {
    Coeffs a = u(at);
    const Coeffs b = v(at);
    for (std::size_t i = 0; i < 4; ++i) a[i] += b[i];
    return a;
  };
}
NumElem operator-(NumElem u) {
  return [u](const Assignment& at) {
    Coeffs a = u(at);
    for (double& x : a) x = -x;
    return a;
  };
}
NumElem operator-(NumElem u, NumElem v) { return std::move(u) + (-std::move(v)); }
NumElem operator*(NumElem u, NumElem v) {
  return [u, v](const Assignment& at) {
    const Coeffs a = u(at);
    Coeffs out{};
    for (int w = 0; w < 4; ++w) {
      if (a[static_cast<std::size_t>(w)] == 0.0) continue;
      const Coeffs b = v(moved(at, w));
      for (int w2 = 0; w2 < 4; ++w2) {
        if ((w & w2) != 0 || b[static_cast<std::size_t>(w2)] == 0.0) continue;
        const double sign = ((w & 2) && (w2 & 1)) ? -1.0 : 1.0;
        out[static_cast<std::size_t>(w | w2)] += sign * a[static_cast<std::size_t>(w)] * b[static_cast<std::size_t>(w2)];
      }
    }
    return out;
  };
}

struct NumMatrix {
  NumElem e[4];
  NumMatrix operator*(const NumMatrix& o) const {
    return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
             e[2] * o.e[1] + e[3] * o.e[3]}};
  }
};

double v(const Assignment& at, const char* k) { return at.at(k); }
double s_of(const Assignment& at) { return v(at, "x") - v(at, "y"); }
double psi_of(const Assignment& at) { return 2.0 - v(at, "phi"); }

double F_num(int n, const Assignment& at) {
  const double x = v(at, "x"), y = v(at, "y"), phi = v(at, "phi"), psi = psi_of(at), s = s_of(at);
  return std::pow(x, n) / (2.0 * (s - psi)) - std::pow(x + phi + psi, n) / (2.0 * (s + phi)) -
         std::pow(y + psi, n) / ((s + phi) * (s - psi));
}
double G_num(int n, const Assignment& at) {
  const double x = v(at, "x"), y = v(at, "y"), phi = v(at, "phi");
  return (std::pow(x + phi, n) - std::pow(y, n)) / (x - y + phi);
}
Assignment tau_point(Assignment at) {
  std::swap(at["x"], at["y"]);
  std::swap(at["p"], at["q"]);
  std::swap(at["E1"], at["E2"]);
  at["phi"] = 2.0 - at["phi"];
  return at;
}

const NumElem kMu = num_word(1);
const NumElem kNu = num_word(2);
NumElem sym(const char* k) {
  const std::string key = k;
  return num_scalar([key](const Assignment& at) { return at.at(key); });
}

NumMatrix num_M() { return {{sym("x"), kMu, kNu, sym("y")}}; }

NumMatrix num_power(int n) {
  NumMatrix r = num_M();
  for (int k = 1; k < n; ++k) r = r * num_M();
  return r;
}

NumMatrix num_closed_power(int n) {
  const NumElem F = num_scalar([n](const Assignment& at) { return F_num(n, at); });
  const NumElem Ft = num_scalar([n](const Assignment& at) { return F_num(n, tau_point(at)); });
  const NumElem G = num_scalar([n](const Assignment& at) { return G_num(n, at); });
  const NumElem Gt = num_scalar([n](const Assignment& at) { return G_num(n, tau_point(at)); });
  const NumElem xn = num_scalar([n](const Assignment& at) { return std::pow(v(at, "x"), n); });
  const NumElem yn = num_scalar([n](const Assignment& at) { return std::pow(v(at, "y"), n); });
  return {{xn - kMu * kNu * F, kMu * G, kNu * Gt, yn - kNu * kMu * Ft}};
}

NumMatrix num_T() {
  const NumElem inv_den = num_scalar([](const Assignment& at) {
    const double s = s_of(at);
    return 1.0 / ((s + v(at, "phi")) * (s - psi_of(at)));
  });
  const NumElem brace_a = num_scalar([](const Assignment& at) {
    const double pq = v(at, "p") * v(at, "q");
    return ((v(at, "phi") + pq * psi_of(at)) / 2.0 - (pq - 1.0) / 2.0 * s_of(at)) * v(at, "E1") - v(at, "p") * v(at, "E2");
  });
  const NumElem brace_d = num_scalar([](const Assignment& at) {
    const double pq = v(at, "p") * v(at, "q");
    return ((psi_of(at) + pq * v(at, "phi")) / 2.0 + (pq - 1.0) / 2.0 * s_of(at)) * v(at, "E2") - v(at, "q") * v(at, "E1");
  });
  const NumElem beta_fn = num_scalar([](const Assignment& at) {
    return (v(at, "q") * v(at, "E1") - v(at, "E2")) / (s_of(at) + v(at, "phi"));
  });
  const NumElem gamma_fn = num_scalar([](const Assignment& at) {
    return (v(at, "p") * v(at, "E2") - v(at, "E1")) / (psi_of(at) - s_of(at));
  });
  return {{sym("E1") - kMu * kNu * inv_den * brace_a, kMu * beta_fn, kNu * gamma_fn,
           sym("E2") - kNu * kMu * inv_den * brace_d}};
}

// d = b + n with b its scalar part and n nilpotent of square zero here.
NumElem num_inverse(const NumElem& d) {
  const NumElem binv = num_scalar([d](const Assignment& at) { return 1.0 / d(at)[0]; });
  const NumElem n = [d](const Assignment& at) {
    Coeffs c = d(at);
    c[0] = 0.0;
    return c;
  };
  return binv - binv * n * binv + binv * n * binv * n * binv;
}

double coeff_deviation(const Coeffs& a, const Coeffs& b) {
  double dev = 0.0;
  for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, scaled_deviation(a[i], b[i]));
  return dev;
}

Coeffs exact_at(const MElement& e, const Assignment& at) {
  Coeffs c{};
  for (const auto& [mono, x] : e.terms()) c[mono.odd & 3U] = x.eval(at, 1e-6);
  return c;
}

struct NumCheck {
  std::string id;
  std::string anchor;
  // Exact sides (already canonical) and the floating sides for one point.
  Pairs exact;
  std::function<std::vector<std::pair<NumElem, NumElem>>()> floating;
};

}  // namespace

NumericFamily mside_family(int n_max) {
  const MSide m;
  auto checks = std::make_shared<std::vector<NumCheck>>();
  const MMatrix T = m.build_T_from_M();
  for (int n = 1; n <= n_max; ++n) {
    const MMatrix it = m.m_power(n);
    const MMatrix cl = m.closed_power(n, FnPlacement::RightOfOdd);
    checks->push_back({idx("power_blocks", n), "block form of M^n with F_n, G_n right of the odd word", entrywise(it, cl),
                       [n] {
                         const NumMatrix a = num_power(n);
                         const NumMatrix b = num_closed_power(n);
                         return std::vector<std::pair<NumElem, NumElem>>{
                             {a.e[0], b.e[0]}, {a.e[1], b.e[1]}, {a.e[2], b.e[2]}, {a.e[3], b.e[3]}};
                       }});
  }
  const MElement mp = m.sym("p");
  const MElement mq = m.sym("q");
  const MElement pqi = m.scalar(MCoefficient::symbol("p") - MCoefficient::symbol("q").inverse());
  const MElement &A = T.a11(), &B = T.a12(), &C = T.a21(), &D = T.a22();
  const Pairs exact_rel = {{A * B, mq * B * A}, {D * B, mq * B * D}, {A * C, mp * C * A},
                           {D * C, mp * C * D}, {B * B, m.zero()},   {C * C, m.zero()},
                           {mq * B * C, -(mp * C * B)}, {commutator(A, D), pqi * C * B}};
  const std::vector<std::string> rel = {"AB=QBA", "DB=QBD", "AC=PCA", "DC=PCD",
                                        "B^2=0",  "C^2=0",  "QBC+PCB=0", "[A,D]=(P-Q^-1)CB"};
  for (std::size_t i = 0; i < rel.size(); ++i) {
    checks->push_back({"reconstruction_relations[" + rel[i] + "]",
                       "the matrix built from M satisfies the defining relations", Pairs{exact_rel[i]}, [i] {
                         const NumMatrix t = num_T();
                         const NumElem &a = t.e[0], &b = t.e[1], &c = t.e[2], &d = t.e[3];
                         const NumElem p = sym("p"), q = sym("q");
                         const NumElem zero = num_scalar([](const Assignment&) { return 0.0; });
                         const NumElem pq_coeff =
                             num_scalar([](const Assignment& at) { return v(at, "p") - 1.0 / v(at, "q"); });
                         const std::vector<std::pair<NumElem, NumElem>> all = {
                             {a * b, q * b * a}, {d * b, q * b * d}, {a * c, p * c * a}, {d * c, p * c * d},
                             {b * b, zero},      {c * c, zero},      {q * b * c, -(p * c * b)},
                             {a * d - d * a, pq_coeff * c * b}};
                         return std::vector<std::pair<NumElem, NumElem>>{all[i]};
                       }});
  }
  checks->push_back({"sdet_exponential", "sdet of the reconstructed T equals e^{h str M} = E1 E2^-1",
                     Pairs{{superdeterminant(T), m.sym("E1") * m.scalar(MCoefficient::symbol("E2").inverse())}}, [] {
                       const NumMatrix t = num_T();
                       const NumElem dinv = num_inverse(t.e[3]);
                       const NumElem sdet = (t.e[0] - t.e[1] * dinv * t.e[2]) * dinv;
                       const NumElem ratio =
                           num_scalar([](const Assignment& at) { return v(at, "E1") / v(at, "E2"); });
                       return std::vector<std::pair<NumElem, NumElem>>{{sdet, ratio}};
                     }});

  NumericFamily f;
  f.suite = "mside";
  for (const auto& c : *checks) f.checks.emplace_back(c.id, c.anchor);
  f.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> phi(0.2, 1.8);
    std::uniform_real_distribution<double> xy(-2.0, 2.0);
    std::bernoulli_distribution neg(0.25);
    return Assignment{{"p", (neg(rng) ? -1.0 : 1.0) * mag(rng)},
                      {"q", (neg(rng) ? -1.0 : 1.0) * mag(rng)},
                      {"phi", phi(rng)},
                      {"x", xy(rng)},
                      {"y", xy(rng)},
                      {"E1", mag(rng)},
                      {"E2", mag(rng)}};
  };
  // Every denominator is s + phi or s - psi with s = x - y, which the
  // shifts leave alone, besides p and q.
  f.guard = [](const Assignment& at) -> std::optional<std::string> {
    const double s = at.at("x") - at.at("y");
    const double phi = at.at("phi");
    if (std::abs(s + phi) < 1e-3) return "x - y + phi too close to 0";
    if (std::abs(s - (2.0 - phi)) < 1e-3) return "x - y - psi too close to 0";
    return std::nullopt;
  };
  f.evaluate = [checks](const Assignment& at) {
    std::vector<std::optional<double>> out(checks->size());
    for (std::size_t i = 0; i < checks->size(); ++i) {
      const NumCheck& c = (*checks)[i];
      try {
        const auto fl = c.floating();
        double dev = 0.0;
        for (std::size_t k = 0; k < fl.size(); ++k) {
          const Coeffs l = fl[k].first(at);
          const Coeffs r = fl[k].second(at);
          dev = std::max({dev, coeff_deviation(l, r), coeff_deviation(exact_at(c.exact[k].first, at), l),
                          coeff_deviation(exact_at(c.exact[k].second, at), r)});
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
