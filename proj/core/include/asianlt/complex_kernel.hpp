#pragma once

#include <complex>

namespace asianlt {

using Complex = std::complex<double>;

/// Budgets and tolerances for the series-based special functions.
struct KernelConfig {
  int bessel_term_cap = 10000;
  double bessel_rel_tol = 1e-13;
  /// Largest argument accepted by the ascending Bessel series.
  double bessel_arg_cap = 600.0;
  int kummer_term_cap = 20000;
  double kummer_rel_tol = 1e-13;
};

/// A complex number held as mantissa * exp(log_scale); keeps values such as
/// e^{-x} Phi(alpha, beta; x) representable when x is in the thousands.
struct ScaledComplex {
  Complex mantissa{1.0, 0.0};
  double log_scale = 0.0;

  [[nodiscard]] Complex value() const;
  /// Principal log of the represented value (mantissa must be non-zero).
  [[nodiscard]] Complex log() const;
};

struct SeriesDiagnostics {
  int terms = 0;
  int largest_term_index = 0;
  /// max_n |term_n| / |sum|; values far above 1 indicate cancellation.
  double cancellation_ratio = 1.0;
};

struct KummerResult {
  ScaledComplex scaled;
  SeriesDiagnostics diagnostics;

  [[nodiscard]] Complex value() const { return scaled.value(); }
};

/// True when w lies on the cut of the principal logarithm (re <= 0, im == 0).
[[nodiscard]] bool on_branch_cut(Complex w) noexcept;

/// sqrt(|w|) exp(i arg(w) / 2) with arg in (-pi, pi); throws DomainError on the cut.
[[nodiscard]] Complex principal_sqrt(Complex w);

/// log|w| + i arg(w); throws DomainError on the cut.
[[nodiscard]] Complex principal_log(Complex w);

/// base^exponent = exp(exponent * log(base)) for a positive real base.
[[nodiscard]] Complex real_pow(double base, Complex exponent);

/// e^w - 1 without cancellation for small |w|.
[[nodiscard]] Complex complex_expm1(Complex w) noexcept;

/// Bessel order sqrt(2z + nu^2) of the Geman-Yor transform.
[[nodiscard]] Complex mu_param(Complex z, Complex nu);

/// Principal-branch log Gamma on the right half-plane (Lanczos, g = 607/128).
[[nodiscard]] Complex log_gamma(Complex w);

/// Modified Bessel function of the first kind I_mu(xi) for Re(mu) > -1,
/// by the ascending series.
[[nodiscard]] Complex bessel_i(Complex mu, double xi, const KernelConfig& cfg = {});

/// e^{-xi} I_mu(xi); same series, no overflow for xi up to the cap.
[[nodiscard]] Complex bessel_i_scaled(Complex mu, double xi, const KernelConfig& cfg = {});

/// Kummer's confluent hypergeometric function Phi(alpha, beta; x) = M(alpha, beta, x).
[[nodiscard]] Complex kummer_phi(Complex alpha, Complex beta, double x,
                                 const KernelConfig& cfg = {});

/// Same series, returned in scaled form together with summation diagnostics.
[[nodiscard]] KummerResult kummer_phi_detailed(Complex alpha, Complex beta, double x,
                                               const KernelConfig& cfg = {});

}  // namespace asianlt
