#include "asianlt/benchmark_cases.hpp"

#include <array>
#include <string>

#include "asianlt/errors.hpp"

namespace asianlt {

namespace {

constexpr double kStrike = 2.0;

constexpr std::array<BenchmarkCase, 7> kCases = {{
    {1, 0.02, 0.10, 1.0, 2.0, 0.056},
    {2, 0.18, 0.30, 1.0, 2.0, 0.219},
    {3, 0.0125, 0.25, 2.0, 2.0, 0.172},
    {4, 0.05, 0.50, 1.0, 1.9, 0.194},
    {5, 0.05, 0.50, 1.0, 2.0, 0.247},
    {6, 0.05, 0.50, 1.0, 2.1, 0.307},
    {7, 0.05, 0.50, 2.0, 2.0, 0.352},
}};

}  // namespace

std::span<const BenchmarkCase> benchmark_cases() noexcept { return kCases; }

const BenchmarkCase& benchmark_case(int id) {
  if (id < 1 || id > static_cast<int>(kCases.size())) {
    throw ValidationError("benchmark case " + std::to_string(id) + " does not exist (1..7)");
  }
  return kCases[static_cast<std::size_t>(id - 1)];
}

MarketInputs to_market(const BenchmarkCase& c) {
  MarketInputs m;
  m.rate = c.rate;
  m.dividend_yield = 0.0;
  m.sigma = c.sigma;
  m.spot = c.spot;
  m.strike = kStrike;
  m.t0 = 0.0;
  m.t = 0.0;
  m.maturity = c.maturity;
  m.running_integral = 0.0;
  return m;
}

}  // namespace asianlt
