#pragma once

#include "asianlt/complex_kernel.hpp"

namespace asianlt {

/// Policy for the removable singularities of the moment formulas.
struct MomentConfig {
  /// Distance from nu = -1, -2, -3 inside which the series forms are used.
  double singularity_radius = 1e-4;
};

/// E[A_x^(nu)] = (e^{2x(nu+1)} - 1) / (2(nu+1)), analytic in nu (value x at nu = -1).
[[nodiscard]] Complex first_moment(double x, Complex nu, const MomentConfig& cfg = {});

/// E[(A_x^(nu))^2], analytic in nu with removable points at -1, -2, -3.
[[nodiscard]] Complex second_moment(double x, Complex nu, const MomentConfig& cfg = {});

/// Generalised first Weber integral in closed form:
///   Gamma((nu+4+mu)/2) / Gamma(mu+1) * Phi((nu+4+mu)/2, mu+1; 1/(2a))
///   * e^{-1/(2a)} * (2a)^{(nu+2-mu)/2},   mu = sqrt(2z + nu^2).
/// Requires Re(z) >= 2 and either real nu or |Im(nu)| <= 1.
[[nodiscard]] Complex weber_d_closed(double a, Complex nu, Complex z, const KernelConfig& cfg = {});

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  unsigned max_depth = 18;
  int panels = 16;
  /// Integrand magnitude, relative to its peak, at which the upper limit is cut.
  double envelope_cutoff = 1e-18;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  double upper_limit = 0.0;
};

/// The same integral by adaptive Gauss-Kronrod quadrature of the Bessel-kernel form
///   e^{-1/(2a)}/a * int_0^inf e^{-x^2/(2a)} x^{nu+3} I_mu(x/a) dx.
[[nodiscard]] QuadratureResult weber_d_quadrature_detailed(double a, Complex nu, Complex z,
                                                           const QuadratureConfig& qcfg = {},
                                                           const KernelConfig& kcfg = {});

[[nodiscard]] Complex weber_d_quadrature(double a, Complex nu, Complex z,
                                         const QuadratureConfig& qcfg = {},
                                         const KernelConfig& kcfg = {});

/// Laplace transform z -> F_GY,a(z) of x -> E[(A_x^(nu) - a)^+] for one (a, nu).
///
/// The transform integral is finite for Re(z) above the finiteness abscissa;
/// the closed form D_nu(a, z) / (z (z - 2(nu+1))) is only known to equal it
/// above the identity abscissa. Evaluation is refused below either bound:
/// the closed-form expression continues past them but is no longer the
/// transform there.
class TransformEvaluator {
 public:
  TransformEvaluator(double a, Complex nu, KernelConfig cfg = {});

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] Complex nu() const noexcept { return nu_; }
  [[nodiscard]] double finiteness_abscissa() const noexcept { return finiteness_abscissa_; }
  [[nodiscard]] double identity_abscissa() const noexcept { return identity_abscissa_; }
  /// max(finiteness, identity).
  [[nodiscard]] double validity_abscissa() const noexcept;
  [[nodiscard]] bool in_domain(Complex z) const noexcept;

  /// Throws DomainError naming both bounds when z is outside the half-plane.
  [[nodiscard]] Complex operator()(Complex z) const;

 private:
  double a_;
  Complex nu_;
  KernelConfig cfg_;
  double finiteness_abscissa_;
  double identity_abscissa_;
};

[[nodiscard]] Complex laplace_f(const TransformEvaluator& eval, Complex z);

}  // namespace asianlt
