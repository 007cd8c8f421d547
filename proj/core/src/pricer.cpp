#include "asianlt/pricer.hpp"

#include <cmath>
#include <string>

#include "asianlt/errors.hpp"
#include "asianlt/transform_core.hpp"

namespace asianlt {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(std::string("MarketInputs: ") + what);
}

}  // namespace

void MarketInputs::validate() const {
  require(std::isfinite(rate) && std::isfinite(dividend_yield), "rate and dividend yield must be finite");
  require(sigma > 0.0 && std::isfinite(sigma), "sigma must be positive");
  require(spot > 0.0 && std::isfinite(spot), "spot must be positive");
  require(strike >= 0.0 && std::isfinite(strike), "strike must be non-negative");
  require(std::isfinite(t0) && std::isfinite(t) && std::isfinite(maturity), "dates must be finite");
  require(t0 <= t, "valuation date precedes the write date");
  require(t < maturity, "valuation date must precede maturity");
  require(running_integral >= 0.0 && std::isfinite(running_integral),
          "running integral must be non-negative");
  require(t > t0 || running_integral == 0.0, "running integral must be zero when t = t0");
}

std::string_view to_string(PricePath path) noexcept {
  switch (path) {
    case PricePath::closed_form_nonpositive_q:
      return "closed_form_nonpositive_q";
    case PricePath::laplace_inversion:
      return "laplace_inversion";
  }
  return "unknown";
}

NormalizedProblem normalize(const MarketInputs& m) {
  m.validate();
  const double s2 = m.sigma * m.sigma;
  NormalizedProblem p;
  p.nu = 2.0 * (m.rate - m.dividend_yield) / s2 - 1.0;
  p.h = 0.25 * s2 * (m.maturity - m.t);
  p.k = m.strike / m.spot;
  p.q_star = s2 / (4.0 * m.spot) * (m.strike * (m.t - m.t0) - m.running_integral);
  p.q = p.k * p.h + p.q_star;
  return p;
}

double price_scale(const MarketInputs& m) {
  return std::exp(-m.rate * (m.maturity - m.t)) / (m.maturity - m.t0) * 4.0 * m.spot /
         (m.sigma * m.sigma);
}

PriceResult price_asian(const MarketInputs& m, const InversionConfig& cfg) {
  PriceResult result;
  result.problem = normalize(m);
  const NormalizedProblem& p = result.problem;
  if (p.q <= 0.0) {
    // Without optionality the average is bought outright: E[A_h] - q.
    result.path = PricePath::closed_form_nonpositive_q;
    result.normalized_price = first_moment(p.h, Complex{p.nu, 0.0}).real() - p.q;
  } else {
    result.path = PricePath::laplace_inversion;
    const InversionResult inv = normalized_price(p.nu, p.h, p.q, cfg);
    result.normalized_price = inv.value;
    result.error_indicator = inv.error_indicator;
  }
  result.price = price_scale(m) * result.normalized_price;
  return result;
}

}  // namespace asianlt
