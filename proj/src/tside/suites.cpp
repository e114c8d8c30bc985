#include "glpq/tside/suites.hpp"

#include <cmath>

#include "glpq/tside/identities.hpp"

namespace glpq {

namespace {

Assignment sample_pq(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::bernoulli_distribution neg(0.25);
  const double p = (neg(rng) ? -1.0 : 1.0) * mag(rng);
  const double q = (neg(rng) ? -1.0 : 1.0) * mag(rng);
  return {{"p", p}, {"q", q}};
}

template <class Build>
NumericFamily tside_family(std::string suite, Build build) {
  return identity_family(
      std::move(suite), build(make_exact_tside()),
      [build](const Assignment& at) { return build(make_real_tside(at.at("p"), at.at("q"))); }, sample_pq,
      [](const Assignment& at) { return pq_pole_guard(at.at("p"), at.at("q")); });
}

}  // namespace

std::optional<std::string> pq_pole_guard(double p, double q, double margin) {
  const double pq = p * q;
  if (std::abs(pq - 1.0) < margin) return "pq too close to 1";
  if (std::abs(pq + 1.0) < margin) return "pq too close to -1";
  return std::nullopt;
}

Report verify_section2(const Section2Params& params, ExecMode mode) {
  nlohmann::ordered_json j;
  j["n_range"] = {params.n_lo, params.n_hi};
  j["m_range"] = {params.m_lo, params.m_hi};
  const auto ids = section2_identities(make_exact_tside(), params.n_lo, params.n_hi, params.m_lo, params.m_hi);
  return run_suite("section2", j, exact_tasks(ids), mode);
}

Report verify_section3(int n_max, ExecMode mode) {
  nlohmann::ordered_json j;
  j["n_max"] = n_max;
  return run_suite("section3", j, exact_tasks(section3_identities(make_exact_tside(), n_max)), mode);
}

Report verify_appendix(int k_max, ExecMode mode) {
  nlohmann::ordered_json j;
  j["k_max"] = k_max;
  return run_suite("appendix", j, exact_tasks(appendix_identities(make_exact_tside(), k_max)), mode);
}

NumericFamily section2_family(const Section2Params& params) {
  return tside_family("section2", [params](const auto& t) {
    return section2_identities(t, params.n_lo, params.n_hi, params.m_lo, params.m_hi);
  });
}

NumericFamily section3_family(int n_max) {
  return tside_family("section3", [n_max](const auto& t) { return section3_identities(t, n_max); });
}

NumericFamily appendix_family(int k_max) {
  return tside_family("appendix", [k_max](const auto& t) { return appendix_identities(t, k_max); });
}

}  // namespace glpq
