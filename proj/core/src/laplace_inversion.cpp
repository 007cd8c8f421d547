#include "asianlt/laplace_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "asianlt/errors.hpp"
#include "asianlt/transform_core.hpp"

namespace asianlt {

void InversionConfig::validate() const {
  if (!(euler_stages > 0) || !(terms > euler_stages)) {
    throw ValidationError("InversionConfig: requires terms > euler_stages > 0");
  }
  if (!(abscissa_margin > 0.0)) {
    throw ValidationError("InversionConfig: abscissa_margin must be positive");
  }
  if (!(target_rel_tol > 0.0)) {
    throw ValidationError("InversionConfig: target_rel_tol must be positive");
  }
}

double aliasing_exponent(const InversionConfig& cfg) {
  // Three digits of headroom over the target: the aliased images are weighted
  // by f(3t)/f(t), which is large for option values near the money.
  return std::log(1e3 / cfg.target_rel_tol);
}

InversionResult bromwich_invert(const LaplaceTransform& transform, double t,
                                const InversionConfig& cfg) {
  cfg.validate();
  if (!(t > 0.0)) {
    throw ValidationError("bromwich_invert: t must be positive");
  }
  const double z0 = transform.abscissa + cfg.abscissa_margin + aliasing_exponent(cfg) / (2.0 * t);
  const double spacing = std::numbers::pi / t;
  const int n = cfg.terms;
  const int m = cfg.euler_stages;

  // Gather every node first; the sum below runs in a fixed order.
  std::vector<Complex> node_values(static_cast<std::size_t>(n) + 1);
  node_values[0] = 0.5 * transform.evaluate(Complex{z0, 0.0});
  for (int k = 1; k <= n; ++k) {
    const Complex z{z0, k * spacing};
    const Complex pair = transform.evaluate(z) + transform.evaluate(std::conj(z));
    node_values[static_cast<std::size_t>(k)] = (k % 2 == 0 ? 0.5 : -0.5) * pair;
  }

  const double prefactor = std::exp(z0 * t) / t;
  std::vector<Complex> partial(node_values.size());
  Complex running{0.0, 0.0};
  double largest = 0.0;
  for (std::size_t k = 0; k < node_values.size(); ++k) {
    running += node_values[k];
    partial[k] = prefactor * running;
    largest = std::max(largest, std::abs(partial[k]));
  }

  std::vector<double> weights(static_cast<std::size_t>(m) + 1);
  double binom = 1.0;
  const double norm = std::ldexp(1.0, -m);
  for (int j = 0; j <= m; ++j) {
    weights[static_cast<std::size_t>(j)] = binom * norm;
    binom = binom * (m - j) / (j + 1);
  }
  auto euler = [&](int last) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= m; ++j) {
      acc += weights[static_cast<std::size_t>(j)] * partial[static_cast<std::size_t>(last - m + j)];
    }
    return acc;
  };
  const Complex estimate = euler(n);
  const Complex previous = euler(n - 1);

  InversionResult result;
  result.value = estimate.real();
  result.error_indicator = std::abs(estimate.real() - previous.real());
  result.imag_residue = std::abs(estimate.imag());
  result.contour_abscissa = z0;
  result.nodes_evaluated = 2 * n + 1;

  if (!std::isfinite(result.value)) {
    throw ConvergenceError("bromwich_invert: non-finite estimate");
  }
  const double noise = 1e3 * std::numeric_limits<double>::epsilon() * largest;
  const double allowed = cfg.target_rel_tol * std::abs(result.value) + noise;
  if (result.error_indicator > allowed || result.imag_residue > allowed) {
    std::ostringstream os;
    os << "bromwich_invert: acceleration did not settle (value " << result.value
       << ", stage difference " << result.error_indicator << ", imaginary residue "
       << result.imag_residue << ", allowed " << allowed << ")";
    throw ConvergenceError(os.str());
  }
  return result;
}

InversionResult normalized_price(double nu, double h, double q, const InversionConfig& cfg,
                                 const KernelConfig& kernel) {
  if (!(h > 0.0)) {
    throw ValidationError("normalized_price: h must be positive");
  }
  if (!(q > 0.0)) {
    throw ValidationError("normalized_price: q must be positive (use the closed form for q <= 0)");
  }
  const TransformEvaluator evaluator(q, Complex{nu, 0.0}, kernel);
  const LaplaceTransform transform{[&evaluator](Complex z) { return evaluator(z); },
                                   evaluator.validity_abscissa()};
  InversionResult result = bromwich_invert(transform, h, cfg);

  const double slack = cfg.target_rel_tol * first_moment(h, Complex{nu, 0.0}).real() +
                       result.error_indicator;
  if (result.value < -slack) {
    std::ostringstream os;
    os << "normalized_price: negative value " << result.value << " beyond tolerance " << slack;
    throw NumericalFailure(os.str());
  }
  result.value = std::max(result.value, 0.0);
  return result;
}

}  // namespace asianlt
