#include "asianlt/transform_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "asianlt/errors.hpp"

namespace asianlt {

namespace {

// int_0^x e^{c u} du; the series x * sum (cx)^n / (n+1)! is used for |c| <= c_radius.
Complex exp_integral(Complex c, double x, double c_radius) {
  if (std::abs(c) <= c_radius) {
    const Complex cx = c * x;
    Complex term{1.0, 0.0};
    Complex sum = term;
    for (int n = 1; n < 200; ++n) {
      term *= cx / static_cast<double>(n + 1);
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return x * sum;
  }
  return complex_expm1(c * x) / c;
}

}  // namespace

Complex first_moment(double x, Complex nu, const MomentConfig& cfg) {
  return exp_integral(2.0 * (nu + 1.0), x, 2.0 * cfg.singularity_radius);
}

Complex second_moment(double x, Complex nu, const MomentConfig& cfg) {
  const double r = cfg.singularity_radius;
  if (std::abs(nu + 1.0) < r) {
    // Integrating over the earlier time first gives a form with only a
    // 1/(nu+3) prefactor, regular at nu = -1.
    const Complex outer = exp_integral(4.0 * (nu + 2.0), x, 4.0 * r);
    const Complex inner = exp_integral(2.0 * (nu + 1.0), x, 2.0 * r);
    return (outer - inner) / (nu + 3.0);
  }
  const Complex first = std::exp(2.0 * x * (nu + 1.0)) * exp_integral(2.0 * (nu + 3.0), x, 2.0 * r);
  const Complex second = exp_integral(4.0 * (nu + 2.0), x, 4.0 * r);
  return (first - second) / (nu + 1.0);
}

Complex weber_d_closed(double a, Complex nu, Complex z, const KernelConfig& cfg) {
  if (!(a > 0.0)) {
    throw DomainError("weber_d_closed: a must be positive");
  }
  if (z.real() < 2.0) {
    throw DomainError("weber_d_closed: requires Re(z) >= 2");
  }
  if (nu.imag() != 0.0 && std::abs(nu.imag()) > 1.0) {
    throw DomainError("weber_d_closed: requires |Im(nu)| <= 1 for complex nu");
  }
  const Complex mu = mu_param(z, nu);
  const Complex alpha = 0.5 * (nu + 4.0 + mu);
  const Complex beta = mu + 1.0;
  const double x = 0.5 / a;
  const KummerResult phi = kummer_phi_detailed(alpha, beta, x, cfg);
  const Complex log_rest = log_gamma(alpha) - log_gamma(beta) +
                           0.5 * (nu + 2.0 - mu) * std::log(2.0 * a) - x + phi.scaled.log_scale;
  return phi.scaled.mantissa * std::exp(log_rest);
}

QuadratureResult weber_d_quadrature_detailed(double a, Complex nu, Complex z,
                                             const QuadratureConfig& qcfg,
                                             const KernelConfig& kcfg) {
  if (!(a > 0.0)) {
    throw DomainError("weber_d_quadrature: a must be positive");
  }
  const Complex mu = mu_param(z, nu);
  if (!(nu.real() + 3.0 + mu.real() > -1.0)) {
    throw DomainError("weber_d_quadrature: integrand is not integrable at the origin");
  }
  const Complex power = nu + 3.0;

  // e^{-1/(2a)} e^{-x^2/(2a)} I_mu(x/a) = e^{-(x-1)^2/(2a)} * [e^{-x/a} I_mu(x/a)]
  auto integrand = [&](double x) -> Complex {
    if (x <= 0.0) return {0.0, 0.0};
    const double d = x - 1.0;
    return std::exp(-d * d / (2.0 * a) + power * std::log(x)) * bessel_i_scaled(mu, x / a, kcfg) / a;
  };

  // Upper limit: walk right from the approximate peak of the integrand until
  // its magnitude has dropped below the cutoff relative to the largest seen.
  const double c = std::max(0.0, nu.real() + 2.5);
  const double x_peak = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * a * c));
  const double step = 0.25 * std::sqrt(a);
  double peak = std::abs(integrand(x_peak));
  double x_max = x_peak;
  int quiet = 0;
  for (int i = 0; i < 100000 && quiet < 2; ++i) {
    x_max += step;
    const double m = std::abs(integrand(x_max));
    peak = std::max(peak, m);
    quiet = m < qcfg.envelope_cutoff * peak ? quiet + 1 : 0;
  }

  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  QuadratureResult result;
  result.upper_limit = x_max;
  const double width = x_max / qcfg.panels;
  for (int p = 0; p < qcfg.panels; ++p) {
    double err = 0.0;
    result.value += Kronrod::integrate(integrand, p * width, (p + 1) * width, qcfg.max_depth,
                                       qcfg.rel_tol, &err);
    result.error_estimate += err;
  }
  // The Gauss/Kronrod difference overstates the error of the Kronrod value by
  // orders of magnitude on smooth panels, hence the slack before failing.
  if (!(result.error_estimate <= 1e3 * qcfg.rel_tol * std::abs(result.value) + qcfg.abs_tol)) {
    std::ostringstream os;
    os << "weber_d_quadrature: error estimate " << result.error_estimate
       << " exceeds tolerance for value " << std::abs(result.value);
    throw ConvergenceError(os.str());
  }
  return result;
}

Complex weber_d_quadrature(double a, Complex nu, Complex z, const QuadratureConfig& qcfg,
                           const KernelConfig& kcfg) {
  return weber_d_quadrature_detailed(a, nu, z, qcfg, kcfg).value;
}

TransformEvaluator::TransformEvaluator(double a, Complex nu, KernelConfig cfg)
    : a_(a), nu_(nu), cfg_(cfg) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("TransformEvaluator: a must be a positive finite number");
  }
  if (nu.imag() != 0.0 && std::abs(nu.imag()) > 1.0) {
    throw DomainError("TransformEvaluator: closed form requires |Im(nu)| <= 1");
  }
  const double im2 = nu.imag() * nu.imag();
  finiteness_abscissa_ = std::max(0.0, 0.5 * im2 + 2.0 * (nu.real() + 1.0));
  if (nu.imag() == 0.0) {
    identity_abscissa_ = nu.real() >= 0.0 ? 2.0 * (nu.real() + 1.0) : 4.0;
  } else {
    identity_abscissa_ = std::max(4.0, finiteness_abscissa_);
  }
}

double TransformEvaluator::validity_abscissa() const noexcept {
  return std::max(finiteness_abscissa_, identity_abscissa_);
}

bool TransformEvaluator::in_domain(Complex z) const noexcept {
  return z.real() > validity_abscissa();
}

Complex TransformEvaluator::operator()(Complex z) const {
  if (!in_domain(z)) {
    std::ostringstream os;
    os << "laplace_F: Re(z) = " << z.real() << " must exceed the finiteness abscissa "
       << finiteness_abscissa_ << " and the identity abscissa " << identity_abscissa_;
    throw DomainError(os.str());
  }
  return weber_d_closed(a_, nu_, z, cfg_) / (z * (z - 2.0 * (nu_ + 1.0)));
}

Complex laplace_f(const TransformEvaluator& eval, Complex z) { return eval(z); }

}  // namespace asianlt
