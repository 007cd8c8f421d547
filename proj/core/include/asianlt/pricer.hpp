#pragma once

#include <string_view>

#include "asianlt/laplace_inversion.hpp"

namespace asianlt {

/// Contract and market data for a fixed-strike arithmetic-average Asian call
/// monitored continuously on [t0, maturity]. Times in years, money in currency.
struct MarketInputs {
  double rate = 0.0;
  double dividend_yield = 0.0;
  double sigma = 0.0;
  double spot = 0.0;
  double strike = 0.0;
  double t0 = 0.0;
  double t = 0.0;
  double maturity = 0.0;
  /// int_{t0}^{t} S_u du, the already accumulated part of the average.
  double running_integral = 0.0;

  /// Throws ValidationError on any violated invariant.
  void validate() const;
};

/// Dimensionless coordinates of the valuation problem.
struct NormalizedProblem {
  double nu = 0.0;
  double h = 0.0;
  double k = 0.0;
  double q_star = 0.0;
  double q = 0.0;
};

enum class PricePath { closed_form_nonpositive_q, laplace_inversion };

[[nodiscard]] std::string_view to_string(PricePath path) noexcept;

struct PriceResult {
  double price = 0.0;
  double normalized_price = 0.0;
  PricePath path = PricePath::laplace_inversion;
  double error_indicator = 0.0;
  NormalizedProblem problem;
};

[[nodiscard]] NormalizedProblem normalize(const MarketInputs& m);

/// e^{-r(T-t)} / (T - t0) * 4 S_t / sigma^2, the factor turning C^(nu)(h, q) into currency.
[[nodiscard]] double price_scale(const MarketInputs& m);

[[nodiscard]] PriceResult price_asian(const MarketInputs& m, const InversionConfig& cfg = {});

}  // namespace asianlt
