#pragma once

#include <cstdint>
#include <vector>

#include "asianlt/complex_kernel.hpp"
#include "asianlt/pricer.hpp"

namespace asianlt {

struct McConfig {
  std::int64_t paths = 200000;
  int steps_per_unit_time = 2000;
  std::uint64_t seed = 20240611;
  bool antithetic = true;
  /// Worker threads; 0 picks std::thread::hardware_concurrency(). Results do
  /// not depend on this value.
  unsigned threads = 0;

  void validate() const;
};

/// Sample mean with its standard error; with antithetic sampling the error is
/// computed from the per-pair averages.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t paths_used = 0;
};

struct ComplexMcEstimate {
  Complex mean;
  /// Larger of the real- and imaginary-part standard errors.
  double std_error = 0.0;
  std::int64_t paths_used = 0;
};

enum class AuxiliaryPayoff { call, put };

/// Discounted (J(T)/(T - t0) - K)^+ under exact log-normal steps, with the
/// time integral accumulated by the trapezoidal rule.
[[nodiscard]] McEstimate mc_price_asian(const MarketInputs& m, const McConfig& cfg = {});

/// E[(A_x^(nu))^order] for order 1 or 2.
[[nodiscard]] McEstimate mc_accumulation_moment(double x, double nu, int order,
                                                const McConfig& cfg = {});

/// L(nu) = E[f(A_x^(0)) e^{nu W_x}] e^{-x nu^2 / 2} with W driftless and
/// f(w) = (w - a)^+ (call) or (a - w)^+ (put). For real nu this is
/// E[f(A_x^(nu))] by Girsanov.
[[nodiscard]] ComplexMcEstimate mc_L(double x, Complex nu, double a, const McConfig& cfg = {},
                                     AuxiliaryPayoff payoff = AuxiliaryPayoff::call);

/// Samples of x -> L(x) on a grid.
struct TabulatedFunction {
  std::vector<double> x;
  std::vector<Complex> values;
};

struct McTabulation {
  TabulatedFunction function;
  std::vector<double> std_error;
  std::int64_t paths_used = 0;
};

/// mc_L at every path node 0, dt, ..., x_max (dt = 1 / steps_per_unit_time),
/// all grid points sharing the same simulated paths.
[[nodiscard]] McTabulation mc_L_tabulate(double x_max, Complex nu, double a,
                                         const McConfig& cfg = {},
                                         AuxiliaryPayoff payoff = AuxiliaryPayoff::call);

/// Trapezoidal int_0^{x_max} e^{-zx} L(x) dx evaluated path by path, so the
/// standard error accounts for the correlation between grid points. Its mean
/// equals laplace_of_samples() applied to mc_L_tabulate() with the same config.
[[nodiscard]] ComplexMcEstimate mc_laplace_of_L(double x_max, Complex nu, double a, Complex z,
                                                const McConfig& cfg = {},
                                                AuxiliaryPayoff payoff = AuxiliaryPayoff::call);

struct LaplaceQuadrature {
  Complex value;
  /// False when |e^{-zX} L(X)| exceeds 1e-6 of |value| (truncation warning).
  bool tail_ok = true;
  double tail_ratio = 0.0;
};

/// Trapezoidal int e^{-zx} L(x) dx over the tabulated grid, which should start at 0.
[[nodiscard]] LaplaceQuadrature laplace_of_samples(const TabulatedFunction& samples, Complex z);

}  // namespace asianlt
