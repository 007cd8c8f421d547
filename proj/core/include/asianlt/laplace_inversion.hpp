#pragma once

#include <functional>

#include "asianlt/complex_kernel.hpp"

namespace asianlt {

struct InversionConfig {
  /// Added to the transform's validity abscissa before the contour shift.
  double abscissa_margin = 1.0;
  /// Number of contour nodes above the real axis (trapezoidal series length).
  int terms = 200;
  /// Binomial (Euler) averaging stages applied to the last partial sums.
  int euler_stages = 25;
  double target_rel_tol = 1e-7;

  /// Throws ValidationError unless terms > euler_stages > 0 and margin, tol > 0.
  void validate() const;
};

/// A transform together with the abscissa to the right of which it may be evaluated.
struct LaplaceTransform {
  std::function<Complex(Complex)> evaluate;
  double abscissa = 0.0;
};

struct InversionResult {
  double value = 0.0;
  /// |difference| between the Euler estimates ending at the last two partial sums.
  double error_indicator = 0.0;
  /// |Im| of the estimate when nodes above and below the axis are summed;
  /// zero up to rounding for a transform of a real function.
  double imag_residue = 0.0;
  /// Real part of the Bromwich line actually used.
  double contour_abscissa = 0.0;
  int nodes_evaluated = 0;
};

/// Exponent A of the contour shift z0 = abscissa + margin + A / (2t); the
/// aliasing error of the trapezoidal rule is of order e^{-A}.
[[nodiscard]] double aliasing_exponent(const InversionConfig& cfg);

/// Inverse Laplace transform at t > 0 by the trapezoidal rule on a vertical
/// Bromwich line with Euler acceleration of the alternating tail.
/// Throws ConvergenceError when the acceleration has not settled to
/// target_rel_tol (up to rounding noise) and propagates DomainError from F.
[[nodiscard]] InversionResult bromwich_invert(const LaplaceTransform& transform, double t,
                                              const InversionConfig& cfg = {});

/// C^(nu)(h, q) = E[(A_h^(nu) - q)^+] for q > 0 by inverting F_GY,q at t = h.
[[nodiscard]] InversionResult normalized_price(double nu, double h, double q,
                                               const InversionConfig& cfg = {},
                                               const KernelConfig& kernel = {});

}  // namespace asianlt
