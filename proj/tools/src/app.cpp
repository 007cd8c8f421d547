#include "asianlt/cli/app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "asianlt/benchmark_cases.hpp"
#include "asianlt/cli/config.hpp"
#include "asianlt/cli/report.hpp"
#include "asianlt/cli/selfcheck.hpp"
#include "asianlt/errors.hpp"
#include "asianlt/laplace_inversion.hpp"
#include "asianlt/mc_oracle.hpp"
#include "asianlt/pricer.hpp"
#include "asianlt/transform_core.hpp"

namespace asianlt::cli {

namespace {

constexpr double kPublishedRounding = 1e-3;

struct Options {
  std::string format = "text";
  std::string output;

  MarketInputs market;
  InversionConfig inversion;

  int case_id = 0;
  bool with_mc = false;
  McConfig mc;

  double a = 0.0;
  double nu_re = 0.0;
  double nu_im = 0.0;
  double z_re = 0.0;
  double z_im = 0.0;

  std::string pair = "exp";
  double param = 1.0;
  double t = 0.5;

  SelfcheckOptions selfcheck;
  std::optional<double> selfcheck_tolerance;
};

void add_inversion_options(CLI::App* cmd, InversionConfig& cfg) {
  cmd->add_option("--terms", cfg.terms, "Bromwich nodes above the real axis")->capture_default_str();
  cmd->add_option("--stages", cfg.euler_stages, "Euler averaging stages")->capture_default_str();
  cmd->add_option("--margin", cfg.abscissa_margin, "Margin over the validity abscissa")
      ->capture_default_str();
  cmd->add_option("--inv-tol", cfg.target_rel_tol, "Inversion target relative tolerance")
      ->capture_default_str();
}

void add_mc_options(CLI::App* cmd, McConfig& cfg) {
  cmd->add_option("--paths", cfg.paths, "Monte Carlo paths")->capture_default_str();
  cmd->add_option("--steps", cfg.steps_per_unit_time, "Time steps per year")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)")->capture_default_str();
  cmd->add_flag("!--no-antithetic", cfg.antithetic, "Disable antithetic pairs");
}

Report price_report(const Options& o) {
  const PriceResult r = price_asian(o.market, o.inversion);
  Report rep;
  rep.command = "price";
  rep.columns = {"price", "normalized_price", "nu", "h", "k", "q_star", "q", "path",
                 "error_indicator"};
  rep.add_row({r.price, r.normalized_price, r.problem.nu, r.problem.h, r.problem.k,
               r.problem.q_star, r.problem.q, std::string(to_string(r.path)),
               price_scale(o.market) * r.error_indicator});
  return rep;
}

Report benchmark_report(const Options& o, std::ostream& err, bool& failed) {
  Report rep;
  rep.command = "benchmark";
  rep.columns = {"case", "r",         "sigma",     "T",         "S0",
                 "nu",   "h",         "q",         "price_transform",
                 "price_mc", "mc_stderr", "abs_dev_vs_paper"};
  std::vector<BenchmarkCase> cases;
  if (o.case_id == 0) {
    for (const auto& c : benchmark_cases()) cases.push_back(c);
  } else {
    cases.push_back(benchmark_case(o.case_id));
  }
  double max_dev = 0.0;
  long long within = 0;
  for (const BenchmarkCase& c : cases) {
    const MarketInputs m = to_market(c);
    try {
      const PriceResult r = price_asian(m, o.inversion);
      Cell mc_mean;
      Cell mc_se;
      if (o.with_mc) {
        const McEstimate est = mc_price_asian(m, o.mc);
        mc_mean = est.mean;
        mc_se = est.std_error;
      }
      const double dev = std::abs(r.price - c.reference_price);
      max_dev = std::max(max_dev, dev);
      if (dev <= kPublishedRounding) ++within;
      rep.add_row({static_cast<long long>(c.id), c.rate, c.sigma, c.maturity, c.spot,
                   r.problem.nu, r.problem.h, r.problem.q, r.price, mc_mean, mc_se, dev});
    } catch (const ConvergenceError& e) {
      err << fmt::format("case {}: {}\n", c.id, e.what());
      failed = true;
    } catch (const NumericalFailure& e) {
      err << fmt::format("case {}: {}\n", c.id, e.what());
      failed = true;
    }
  }
  rep.summary = {{"cases", static_cast<long long>(rep.rows.size())},
                 {"max_abs_dev_vs_published", max_dev},
                 {"within_published_rounding", within}};
  return rep;
}

Report transform_report(const Options& o) {
  const Complex nu{o.nu_re, o.nu_im};
  const Complex z{o.z_re, o.z_im};
  const TransformEvaluator eval(o.a, nu);
  const Complex f = laplace_f(eval, z);
  const Complex d = weber_d_closed(o.a, nu, z);
  const Complex mu = mu_param(z, nu);
  Report rep;
  rep.command = "transform";
  rep.columns = {"a", "nu_re", "nu_im", "z_re", "z_im", "mu_re", "mu_im", "d_re", "d_im",
                 "f_re", "f_im", "finiteness_abscissa", "identity_abscissa"};
  rep.add_row({o.a, nu.real(), nu.imag(), z.real(), z.imag(), mu.real(), mu.imag(), d.real(),
               d.imag(), f.real(), f.imag(), eval.finiteness_abscissa(), eval.identity_abscissa()});
  return rep;
}

Report invert_test_report(const Options& o) {
  const double p = o.param;
  LaplaceTransform transform;
  double exact = 0.0;
  if (o.pair == "exp") {
    transform = {[p](Complex z) { return 1.0 / (z - p); }, p};
    exact = std::exp(p * o.t);
  } else if (o.pair == "ramp") {
    transform = {[](Complex z) { return 1.0 / (z * z); }, 0.0};
    exact = o.t;
  } else {
    transform = {[p](Complex z) { return 1.0 / (z * (z - p)); }, std::max(p, 0.0)};
    exact = p == 0.0 ? o.t : std::expm1(p * o.t) / p;
  }
  const InversionResult r = bromwich_invert(transform, o.t, o.inversion);
  const double rel = std::abs(r.value - exact) / std::abs(exact);
  Report rep;
  rep.command = "invert-test";
  rep.columns = {"pair", "param", "t", "value", "exact", "rel_error", "error_indicator",
                 "imag_residue", "contour_abscissa", "within_tolerance"};
  rep.add_row({o.pair, p, o.t, r.value, exact, rel, r.error_indicator, r.imag_residue,
               r.contour_abscissa, rel <= o.inversion.target_rel_tol});
  return rep;
}

Report selfcheck_report(const Options& o, bool& failed) {
  SelfcheckOptions opts = o.selfcheck;
  opts.tolerance = o.selfcheck_tolerance;
  const std::vector<CheckResult> results = run_selfcheck(opts);
  Report rep;
  rep.command = "selfcheck";
  rep.columns = {"suite", "check", "passed", "observed", "tolerance"};
  long long passed = 0;
  for (const CheckResult& r : results) {
    rep.add_row({r.suite, r.name, r.passed, r.observed, r.tolerance});
    if (r.passed) ++passed;
  }
  failed = passed != static_cast<long long>(results.size());
  rep.summary = {{"checks", static_cast<long long>(results.size())},
                 {"passed", passed},
                 {"failed", static_cast<long long>(results.size()) - passed},
                 {"all_passed", !failed}};
  return rep;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arithmetic-average Asian option pricing by Laplace transform inversion", "asianlt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<FlatJsonConfig>(&app));
  app.set_config("--config", "", "Flat JSON file of option values");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("ASIANLT_FORMAT")
      ->capture_default_str();
  app.add_option("--output", o.output, "Write the report to this file instead of stdout");

  auto* price = app.add_subcommand("price", "Price one fixed-strike Asian call");
  price->add_option("--rate", o.market.rate, "Risk-free rate")->required();
  price->add_option("--div", o.market.dividend_yield, "Dividend yield")->capture_default_str();
  price->add_option("--sigma", o.market.sigma, "Volatility")->required();
  price->add_option("--spot", o.market.spot, "Spot price at the valuation date")->required();
  price->add_option("--strike", o.market.strike, "Strike")->required();
  price->add_option("--maturity", o.market.maturity, "Maturity T")->required();
  price->add_option("--t0", o.market.t0, "Start of the averaging window")->capture_default_str();
  price->add_option("--t", o.market.t, "Valuation date")->capture_default_str();
  price->add_option("--running-integral", o.market.running_integral,
                    "Integral of S over [t0, t]")
      ->capture_default_str();
  add_inversion_options(price, o.inversion);

  auto* bench = app.add_subcommand("benchmark", "Price the seven built-in benchmark cases");
  bench->add_option("--case", o.case_id, "Single case 1..7 (0 = all)")
      ->check(CLI::Range(0, 7))
      ->capture_default_str();
  bench->add_flag("--with-mc", o.with_mc, "Add Monte Carlo columns");
  add_mc_options(bench, o.mc);
  add_inversion_options(bench, o.inversion);

  auto* transform = app.add_subcommand("transform", "Evaluate D and F at one point");
  transform->add_option("--a", o.a, "Auxiliary strike a")->required();
  transform->add_option("--nu", o.nu_re, "Re(nu)")->required();
  transform->add_option("--nu-im", o.nu_im, "Im(nu)")->capture_default_str();
  transform->add_option("--z-re", o.z_re, "Re(z)")->required();
  transform->add_option("--z-im", o.z_im, "Im(z)")->capture_default_str();

  auto* invert = app.add_subcommand("invert-test", "Invert a known transform pair");
  invert->add_option("--pair", o.pair, "exp: 1/(z-p); ramp: 1/z^2; rational: 1/(z(z-p))")
      ->check(CLI::IsMember({"exp", "ramp", "rational"}))
      ->capture_default_str();
  invert->add_option("--param", o.param, "Pair parameter p")->capture_default_str();
  invert->add_option("--t", o.t, "Evaluation time")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_inversion_options(invert, o.inversion);

  auto* self = app.add_subcommand("selfcheck", "Run the built-in numerical self checks");
  self->add_option("--suite", o.selfcheck.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "kernel", "sqrt-lemma", "weber", "inversion", "moments"}))
      ->capture_default_str();
  self->add_option("--samples", o.selfcheck.samples, "Samples for the square-root lemma")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  self->add_option("--tolerance", o.selfcheck_tolerance, "Override every check tolerance")
      ->check(CLI::PositiveNumber);
  self->add_option("--seed", o.selfcheck.seed, "Sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  Report report;
  int code = kSuccess;
  try {
    if (price->parsed()) {
      report = price_report(o);
    } else if (bench->parsed()) {
      bool failed = false;
      report = benchmark_report(o, err, failed);
      if (failed) code = kNumericalFailure;
    } else if (transform->parsed()) {
      report = transform_report(o);
    } else if (invert->parsed()) {
      report = invert_test_report(o);
    } else {
      bool failed = false;
      report = selfcheck_report(o, failed);
      if (failed) code = kSelfcheckFailed;
    }
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "outside the domain: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }

  std::ostringstream rendered;
  render(report, parse_format(o.format), rendered);
  if (o.output.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << rendered.str())) {
      err << "cannot write " << o.output << '\n';
      return kInvalidInput;
    }
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("asianlt");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace asianlt::cli
