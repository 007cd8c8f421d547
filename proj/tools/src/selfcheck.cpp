#include "asianlt/cli/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "asianlt/complex_kernel.hpp"
#include "asianlt/laplace_inversion.hpp"
#include "asianlt/rng.hpp"
#include "asianlt/transform_core.hpp"

namespace asianlt::cli {

namespace {

double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got);
}

class Collector {
 public:
  Collector(std::string suite, double default_tol, const SelfcheckOptions& opts,
            std::vector<CheckResult>& out)
      : suite_(std::move(suite)), tol_(opts.tolerance.value_or(default_tol)), out_(out) {}

  // Records a relative-error check; exceptions count as failures.
  void relative(const std::string& name, const std::function<Complex()>& got, Complex want) {
    relative(name, got, [want] { return want; });
  }

  void relative(const std::string& name, const std::function<Complex()>& got,
                const std::function<Complex()>& want) {
    CheckResult r{suite_, name, false, INFINITY, tol_};
    try {
      r.observed = rel_err(got(), want());
      r.passed = r.observed <= tol_;
    } catch (const std::exception&) {
      r.passed = false;
    }
    out_.push_back(std::move(r));
  }

  void record(CheckResult r) { out_.push_back(std::move(r)); }
  [[nodiscard]] double tolerance() const { return tol_; }
  [[nodiscard]] const std::string& suite() const { return suite_; }

 private:
  std::string suite_;
  double tol_;
  std::vector<CheckResult>& out_;
};

void kernel_suite(const SelfcheckOptions& opts, std::vector<CheckResult>& out) {
  Collector c("kernel", 1e-12, opts, out);
  const double pi = std::numbers::pi;
  c.relative("log_gamma(1/2)", [] { return log_gamma({0.5, 0.0}); }, {0.5 * std::log(pi), 0.0});
  c.relative("log_gamma(10)", [] { return log_gamma({10.0, 0.0}); }, {std::log(362880.0), 0.0});
  for (const Complex w : {Complex{0.3, 2.0}, Complex{4.5, -7.0}, Complex{20.0, 30.0}}) {
    c.relative(fmt::format("log_gamma recurrence at ({},{})", w.real(), w.imag()),
               [w] { return log_gamma(w + 1.0) - log_gamma(w); }, std::log(w));
  }
  for (const double xi : {0.5, 3.0, 25.0}) {
    c.relative(fmt::format("I_1/2({})", xi), [xi] { return bessel_i({0.5, 0.0}, xi); },
               {std::sqrt(2.0 / (pi * xi)) * std::sinh(xi), 0.0});
    c.relative(fmt::format("I_-1/2({})", xi), [xi] { return bessel_i({-0.5, 0.0}, xi); },
               {std::sqrt(2.0 / (pi * xi)) * std::cosh(xi), 0.0});
  }
  for (const double x : {0.5, 8.0, 50.0}) {
    const Complex alpha{2.5, 1.5};
    c.relative(fmt::format("Phi(a,a;{}) = e^x", x), [=] { return kummer_phi(alpha, alpha, x); },
               {std::exp(x), 0.0});
    c.relative(fmt::format("Phi(1,2;{}) = expm1(x)/x", x),
               [=] { return kummer_phi({1.0, 0.0}, {2.0, 0.0}, x); }, {std::expm1(x) / x, 0.0});
  }
}

void sqrt_lemma_suite(const SelfcheckOptions& opts, std::vector<CheckResult>& out) {
  PathRng rng(opts.seed, 0x5157);
  std::uniform_real_distribution<double> re_z(2.0, 200.0);
  std::uniform_real_distribution<double> im_z(-200.0, 200.0);
  std::uniform_real_distribution<double> re_nu(-20.0, 20.0);
  std::uniform_real_distribution<double> im_nu(-1.0, 1.0);
  double worst = INFINITY;
  std::int64_t violations = 0;
  for (std::int64_t i = 0; i < opts.samples; ++i) {
    // Every eighth sample sits on the boundary Re(z) = 2.
    const Complex z{i % 8 == 0 ? 2.0 : re_z(rng), im_z(rng)};
    const Complex nu{re_nu(rng), im_nu(rng)};
    const double margin = mu_param(z, nu).real() - std::abs(nu.real());
    worst = std::min(worst, margin);
    if (!(margin > 0.0)) ++violations;
  }
  CheckResult r{"sqrt-lemma", fmt::format("Re(mu) > |Re(nu)| on {} samples", opts.samples),
                violations == 0, worst, 0.0};
  out.push_back(std::move(r));
}

void weber_suite(const SelfcheckOptions& opts, std::vector<CheckResult>& out) {
  Collector c("weber", 1e-8, opts, out);
  for (const double a : {0.0625, 1.0, 8.0}) {
    for (const Complex nu : {Complex{0.0, 0.0}, Complex{-0.6, 0.0}, Complex{0.5, 0.5}}) {
      for (const Complex z : {Complex{6.0, 0.0}, Complex{8.0, 5.0}}) {
        c.relative(fmt::format("D closed vs quadrature a={} nu=({},{}) z=({},{})", a, nu.real(),
                               nu.imag(), z.real(), z.imag()),
                   [=] { return weber_d_closed(a, nu, z); }, [=] { return weber_d_quadrature(a, nu, z); });
      }
    }
  }
}

void inversion_suite(const SelfcheckOptions& opts, std::vector<CheckResult>& out) {
  Collector c("inversion", 1e-7, opts, out);
  InversionConfig cfg;
  auto invert = [&cfg](std::function<Complex(Complex)> f, double abscissa, double t) {
    return Complex{bromwich_invert({std::move(f), abscissa}, t, cfg).value, 0.0};
  };
  for (const double t : {1e-3, 0.1, 1.0}) {
    for (const double a : {-2.0, 1.0, 4.0}) {
      c.relative(fmt::format("1/(z-{}) at t={}", a, t),
                 [=] { return invert([a](Complex z) { return 1.0 / (z - a); }, a, t); },
                 {std::exp(a * t), 0.0});
      c.relative(fmt::format("1/(z(z-{})) at t={}", a, t),
                 [=] {
                   return invert([a](Complex z) { return 1.0 / (z * (z - a)); }, std::max(a, 0.0), t);
                 },
                 {std::expm1(a * t) / a, 0.0});
    }
    c.relative(fmt::format("1/z^2 at t={}", t),
               [=] { return invert([](Complex z) { return 1.0 / (z * z); }, 0.0, t); }, {t, 0.0});
  }
}

void moments_suite(const SelfcheckOptions& opts, std::vector<CheckResult>& out) {
  Collector c("moments", 1e-8, opts, out);
  const MomentConfig mcfg;
  const double r = mcfg.singularity_radius;
  c.relative("first_moment(0.5, -1) = 0.5", [] { return first_moment(0.5, {-1.0, 0.0}); },
             {0.5, 0.0});
  c.relative("first_moment(0.1, 0)", [] { return first_moment(0.1, {0.0, 0.0}); },
             {0.5 * std::expm1(0.2), 0.0});
  for (const double x : {0.05, 0.25, 1.0}) {
    c.relative(fmt::format("first_moment seam at -1, x={}", x),
               [=] { return first_moment(x, {-1.0 + r * (1.0 - 1e-9), 0.0}); },
               [=] { return first_moment(x, {-1.0 + r * (1.0 + 1e-9), 0.0}); });
    for (const double pole : {-1.0, -2.0, -3.0}) {
      for (const double side : {-1.0, 1.0}) {
        c.relative(fmt::format("second_moment seam at {}{}r, x={}", pole, side > 0 ? "+" : "-", x),
                   [=] { return second_moment(x, {pole + side * r * (1.0 - 1e-9), 0.0}); },
                   [=] { return second_moment(x, {pole + side * r * (1.0 + 1e-9), 0.0}); });
      }
    }
  }
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opts) {
  const std::string& s = opts.suite;
  const bool all = s == "all";
  if (!all && s != "kernel" && s != "sqrt-lemma" && s != "weber" && s != "inversion" &&
      s != "moments") {
    throw std::invalid_argument("unknown selfcheck suite: " + s);
  }
  if (opts.samples < 1) throw std::invalid_argument("selfcheck: samples must be positive");
  std::vector<CheckResult> out;
  if (all || s == "kernel") kernel_suite(opts, out);
  if (all || s == "sqrt-lemma") sqrt_lemma_suite(opts, out);
  if (all || s == "weber") weber_suite(opts, out);
  if (all || s == "inversion") inversion_suite(opts, out);
  if (all || s == "moments") moments_suite(opts, out);
  return out;
}

}  // namespace asianlt::cli
