// Command-line front end: normalize expressions and run the verification
// suites. Exit codes: 0 pass, 1 failed check or evaluation error, 2 usage.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glpq/cli/commands.hpp"
#include "glpq/dsl/contexts.hpp"

namespace {

struct Common {
  std::string json_path;
  std::uint64_t seed = 1;
  bool serial = false;
  std::optional<int> n_min, n_max, m_min, m_max, k_max, N, K;
  std::vector<std::string> rays;
};

void add_suite_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--json", c.json_path, "write the JSON report to this path");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_flag("--serial", c.serial, "run checks on one thread");
  cmd->add_option("--n-min", c.n_min, "lowest power (section2)");
  cmd->add_option("--n-max", c.n_max, "highest power (section2, section3, mside)");
  cmd->add_option("--m-min", c.m_min, "lowest exponent of the a^n d^m exchange (section2)");
  cmd->add_option("--m-max", c.m_max, "highest exponent of the a^n d^m exchange (section2)");
  cmd->add_option("--k-max", c.k_max, "largest k (appendix)");
  cmd->add_option("--N", c.N, "truncation weight (series)");
  cmd->add_option("--K", c.K, "Laurent order (series)");
  cmd->add_option("--rays", c.rays, "rays a,b (series)");
}

glpq::SuiteOptions suite_options(const Common& c) {
  glpq::SuiteOptions o;
  o.mode = c.serial ? glpq::ExecMode::Serial : glpq::ExecMode::Parallel;
  if (c.n_max) {
    o.section2.n_hi = *c.n_max;
    o.section2.n_lo = -*c.n_max;
    o.section3_n_max = *c.n_max;
    o.mside_n_max = *c.n_max;
  }
  if (c.n_min) o.section2.n_lo = *c.n_min;
  if (c.m_min) o.section2.m_lo = *c.m_min;
  if (c.m_max) o.section2.m_hi = *c.m_max;
  if (c.k_max) o.appendix_k_max = *c.k_max;
  if (c.N) o.series.N = *c.N;
  if (c.K) o.series.K = *c.K;
  if (!c.rays.empty()) {
    o.series.rays.clear();
    for (const auto& r : c.rays) o.series.rays.push_back(glpq::parse_ray(r));
  }
  if (o.section2.n_lo > o.section2.n_hi || o.section2.m_lo > o.section2.m_hi) {
    throw std::invalid_argument("empty exponent range");
  }
  if (o.section3_n_max < 1 || o.mside_n_max < 1 || o.appendix_k_max < 1) {
    throw std::invalid_argument("n-max and k-max must be at least 1");
  }
  for (const auto& [a, b] : o.series.rays) {
    glpq::SeriesConfig cfg;
    cfg.N = o.series.N;
    cfg.K = o.series.K;
    cfg.alpha = a;
    cfg.beta = b;
    cfg.validate();
  }
  return o;
}

int emit(const glpq::Report& r, const std::string& json_path) {
  std::cout << glpq::to_text(r);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << glpq::to_json(r).dump(2) << "\n";
  }
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the two-parameter quantum supergroup identities"};
  app.require_subcommand(1);

  std::string ctx = "tside";
  std::string expr;
  Common norm_series;
  auto* normalize = app.add_subcommand("normalize", "print the canonical form of an expression");
  normalize->add_option("--ctx", ctx, "tside, mside or series")->check(CLI::IsMember({"tside", "mside", "series"}));
  normalize->add_option("expr", expr, "expression")->required();
  normalize->add_option("--N", norm_series.N, "truncation weight (series)");
  normalize->add_option("--K", norm_series.K, "Laurent order (series)");
  std::string norm_ray;
  normalize->add_option("--ray", norm_ray, "ray a,b (series)");

  std::string suite_name;
  Common suite;
  auto* suite_cmd = app.add_subcommand("suite", "run a verification suite");
  suite_cmd->add_option("name", suite_name, "section2, section3, appendix, series, mside or all")
      ->required()
      ->check(CLI::IsMember({"section2", "section3", "appendix", "series", "mside", "all"}));
  add_suite_options(suite_cmd, suite);

  std::string spot_name;
  Common spot;
  int trials = 20;
  double threshold = 1e-9;
  auto* spot_cmd = app.add_subcommand("spotcheck", "floating spot checks of a suite");
  spot_cmd->add_option("name", spot_name, "section2, section3, appendix, series, mside or all")
      ->required()
      ->check(CLI::IsMember({"section2", "section3", "appendix", "series", "mside", "all"}));
  spot_cmd->add_option("--trials", trials, "accepted random assignments")->check(CLI::PositiveNumber);
  spot_cmd->add_option("--threshold", threshold, "largest accepted relative deviation")->check(CLI::NonNegativeNumber);
  add_suite_options(spot_cmd, spot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*normalize) {
      glpq::SeriesContextOptions so;
      if (norm_series.N) so.config.N = *norm_series.N;
      if (norm_series.K) so.config.K = *norm_series.K;
      if (!norm_ray.empty()) std::tie(so.config.alpha, so.config.beta) = glpq::parse_ray(norm_ray);
      so.config.validate();
      std::cout << glpq::normalize(expr, glpq::parse_context(ctx), so) << "\n";
      return 0;
    }
    if (*suite_cmd) return emit(glpq::run_named_suite(suite_name, suite_options(suite)), suite.json_path);
    if (*spot_cmd) {
      glpq::SpotcheckOptions so;
      so.trials = trials;
      so.seed = spot.seed;
      so.threshold = threshold;
      const glpq::SuiteOptions o = suite_options(spot);
      so.mode = o.mode;
      return emit(glpq::run_named_spotcheck(spot_name, o, so), spot.json_path);
    }
  } catch (const glpq::SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const glpq::UnknownIdentifier& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const glpq::InvalidRay& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
