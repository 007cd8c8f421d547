#include "asianlt/complex_kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "asianlt/errors.hpp"
#include "series_sum.hpp"

namespace asianlt {

namespace {

std::string describe(Complex w) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << w.real() << ", " << w.imag() << ')';
  return os.str();
}

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

// log Gamma(1 + z) for Re(z) > -1/2.
Complex lanczos_log_gamma_1p(Complex z) {
  Complex series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    series += kLanczos[k] / (z + static_cast<double>(k));
  }
  const Complex t = z + (kLanczosG + 0.5);
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex ScaledComplex::value() const {
  // Apply the scale in pieces so a small mantissa times a large scale does
  // not overflow on the way.
  constexpr double kStep = 600.0;
  Complex v = mantissa;
  double s = log_scale;
  while (s > kStep && v != Complex{0.0, 0.0}) {
    v *= std::exp(kStep);
    s -= kStep;
  }
  while (s < -kStep && v != Complex{0.0, 0.0}) {
    v *= std::exp(-kStep);
    s += kStep;
  }
  return v * std::exp(s);
}

Complex ScaledComplex::log() const { return std::log(mantissa) + log_scale; }

bool on_branch_cut(Complex w) noexcept { return w.imag() == 0.0 && w.real() <= 0.0; }

Complex principal_sqrt(Complex w) {
  if (on_branch_cut(w)) {
    throw DomainError("principal_sqrt: argument " + describe(w) + " lies on the branch cut");
  }
  return std::sqrt(w);
}

Complex principal_log(Complex w) {
  if (on_branch_cut(w)) {
    throw DomainError("principal_log: argument " + describe(w) + " lies on the branch cut");
  }
  return std::log(w);
}

Complex real_pow(double base, Complex exponent) {
  if (!(base > 0.0)) {
    throw DomainError("real_pow: base must be positive");
  }
  return std::exp(exponent * std::log(base));
}

Complex complex_expm1(Complex w) noexcept {
  const double re = w.real();
  const double im = w.imag();
  if (im == 0.0) {
    return {std::expm1(re), 0.0};
  }
  // e^{re} cos(im) - 1 = expm1(re) cos(im) - 2 sin^2(im / 2)
  const double half_sin = std::sin(0.5 * im);
  const double real_part = std::expm1(re) * std::cos(im) - 2.0 * half_sin * half_sin;
  return {real_part, std::exp(re) * std::sin(im)};
}

Complex mu_param(Complex z, Complex nu) { return principal_sqrt(2.0 * z + nu * nu); }

Complex log_gamma(Complex w) {
  if (!(w.real() > 0.0)) {
    throw DomainError("log_gamma: requires Re(w) > 0, got " + describe(w));
  }
  if (w.real() < 0.5) {
    // Gamma(w) = Gamma(w + 1) / w keeps the Lanczos sum in its accurate region.
    return lanczos_log_gamma_1p(w) - std::log(w);
  }
  return lanczos_log_gamma_1p(w - 1.0);
}

Complex bessel_i_scaled(Complex mu, double xi, const KernelConfig& cfg) {
  if (!(mu.real() > -1.0)) {
    throw DomainError("bessel_i: requires Re(mu) > -1, got " + describe(mu));
  }
  if (!(xi >= 0.0)) {
    throw DomainError("bessel_i: argument must be non-negative");
  }
  if (xi > cfg.bessel_arg_cap) {
    throw DomainError("bessel_i: argument " + std::to_string(xi) +
                      " exceeds the ascending-series cap " + std::to_string(cfg.bessel_arg_cap));
  }
  if (xi == 0.0) {
    if (mu == Complex{0.0, 0.0}) return {1.0, 0.0};
    if (mu.real() > 0.0) return {0.0, 0.0};
    throw DomainError("bessel_i: I_mu(0) is unbounded for Re(mu) <= 0, mu != 0");
  }

  const double half = 0.5 * xi;
  const double quarter_sq = half * half;
  Complex term = std::exp(mu * std::log(half) - log_gamma(mu + 1.0) - xi);
  detail::NeumaierComplex sum;
  sum.add(term);
  for (int n = 0; n < cfg.bessel_term_cap; ++n) {
    const double k = n + 1.0;
    const Complex ratio = quarter_sq / (k * (mu + k));
    term *= ratio;
    sum.add(term);
    const Complex total = sum.value();
    if (std::abs(term) <= cfg.bessel_rel_tol * std::abs(total) && std::abs(ratio) < 0.5) {
      return total;
    }
  }
  throw ConvergenceError("bessel_i: series did not converge within " +
                         std::to_string(cfg.bessel_term_cap) + " terms");
}

Complex bessel_i(Complex mu, double xi, const KernelConfig& cfg) {
  return bessel_i_scaled(mu, xi, cfg) * std::exp(xi);
}

KummerResult kummer_phi_detailed(Complex alpha, Complex beta, double x, const KernelConfig& cfg) {
  if (!(x >= 0.0)) {
    throw DomainError("kummer_phi: argument must be non-negative");
  }
  if (beta.imag() == 0.0 && beta.real() <= 0.0 && beta.real() == std::round(beta.real())) {
    throw DomainError("kummer_phi: beta " + describe(beta) + " is a non-positive integer");
  }

  KummerResult result;
  if (x == 0.0) {
    result.diagnostics.terms = 1;
    return result;
  }

  // Terms are carried relative to exp(log_scale) and renormalised before they
  // can overflow; for the arguments in use the series has no sign changes to
  // speak of, so a running scale is enough.
  constexpr double kRescale = 0x1p-600;
  const double log_rescale = std::log(kRescale);
  double log_scale = 0.0;
  Complex term{1.0, 0.0};
  detail::NeumaierComplex sum;
  sum.add(term);
  double largest = 1.0;
  double largest_log_scale = 0.0;
  int largest_index = 0;

  for (int n = 0; n < cfg.kummer_term_cap; ++n) {
    const double k = static_cast<double>(n);
    const Complex ratio = (alpha + k) / (beta + k) * (x / (k + 1.0));
    term *= ratio;
    sum.add(term);
    const double mag = std::abs(term);
    if (mag * std::exp(log_scale - largest_log_scale) > largest) {
      largest = mag;
      largest_log_scale = log_scale;
      largest_index = n + 1;
    }
    if (mag > 0x1p400 || std::abs(sum.value()) > 0x1p400) {
      term *= kRescale;
      sum.scale(kRescale);
      log_scale -= log_rescale;
    }
    const Complex total = sum.value();
    const double total_mag = std::abs(total);
    const bool settled = std::abs(ratio) < 0.5 && k + 1.0 >= std::abs(alpha);
    if (term == Complex{0.0, 0.0} || (settled && std::abs(term) <= cfg.kummer_rel_tol * total_mag)) {
      result.scaled = {total, log_scale};
      result.diagnostics.terms = n + 2;
      result.diagnostics.largest_term_index = largest_index;
      result.diagnostics.cancellation_ratio =
          total_mag > 0.0 ? largest * std::exp(largest_log_scale - log_scale) / total_mag : INFINITY;
      return result;
    }
  }
  throw ConvergenceError("kummer_phi: series did not converge within " +
                         std::to_string(cfg.kummer_term_cap) + " terms (x = " +
                         std::to_string(x) + ")");
}

Complex kummer_phi(Complex alpha, Complex beta, double x, const KernelConfig& cfg) {
  return kummer_phi_detailed(alpha, beta, x, cfg).value();
}

}  // namespace asianlt
