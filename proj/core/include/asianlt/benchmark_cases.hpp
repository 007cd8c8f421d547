#pragma once

#include <span>

#include "asianlt/pricer.hpp"

namespace asianlt {

/// One row of the seven-case benchmark table: K = 2, no dividends, t = t0 = 0.
struct BenchmarkCase {
  int id = 0;
  double rate = 0.0;
  double sigma = 0.0;
  double maturity = 0.0;
  double spot = 0.0;
  /// Published price, rounded to three decimals.
  double reference_price = 0.0;
};

[[nodiscard]] std::span<const BenchmarkCase> benchmark_cases() noexcept;

/// Throws ValidationError for an id outside 1..7.
[[nodiscard]] const BenchmarkCase& benchmark_case(int id);

[[nodiscard]] MarketInputs to_market(const BenchmarkCase& c);

}  // namespace asianlt
