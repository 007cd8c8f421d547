#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "asianlt/complex_kernel.hpp"
#include "asianlt/errors.hpp"
#include "reference_values.hpp"

using namespace asianlt;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(PrincipalBranch, SqrtAndLogRejectTheCut) {
  EXPECT_THROW((void)principal_sqrt({-4.0, 0.0}), DomainError);
  EXPECT_THROW((void)principal_sqrt({0.0, 0.0}), DomainError);
  EXPECT_THROW((void)principal_log({-1.0, 0.0}), DomainError);
  EXPECT_TRUE(on_branch_cut({-0.0, 0.0}));
  EXPECT_FALSE(on_branch_cut({-1.0, 1e-300}));
}

TEST(PrincipalBranch, SqrtHasNonNegativeRealPart) {
  const Complex w = principal_sqrt({-4.0, 1e-12});
  EXPECT_GE(w.real(), 0.0);
  EXPECT_NEAR(w.imag(), 2.0, 1e-12);
  const Complex v = principal_sqrt({-4.0, -1e-12});
  EXPECT_NEAR(v.imag(), -2.0, 1e-12);
}

TEST(PrincipalBranch, LogArgumentInHalfOpenInterval) {
  const Complex l = principal_log({-1.0, 1e-14});
  EXPECT_LE(l.imag(), std::numbers::pi);
  EXPECT_GT(l.imag(), -std::numbers::pi);
}

TEST(RealPow, MatchesExpLog) {
  const Complex p = real_pow(0.125, {1.5, -0.7});
  EXPECT_LT(rel(p, std::exp(Complex{1.5, -0.7} * std::log(0.125))), 1e-15);
  EXPECT_THROW((void)real_pow(0.0, {1.0, 0.0}), DomainError);
  EXPECT_THROW((void)real_pow(-2.0, {1.0, 0.0}), DomainError);
}

TEST(ComplexExpm1, AccurateForTinyArguments) {
  const Complex w{1e-10, 2e-10};
  const Complex series = w + 0.5 * w * w;
  EXPECT_LT(rel(complex_expm1(w), series), 1e-15);
  EXPECT_LT(rel(complex_expm1({3.0, 1.0}), std::exp(Complex{3.0, 1.0}) - 1.0), 1e-15);
}

TEST(MuParam, PrincipalRoot) {
  EXPECT_LT(rel(mu_param({8.0, 0.0}, {0.0, 0.0}), {4.0, 0.0}), 1e-15);
  const Complex mu = mu_param({4.5, -20.0}, {-0.6, 0.9});
  EXPECT_GT(mu.real(), 0.0);
  EXPECT_LT(rel(mu * mu, 2.0 * Complex{4.5, -20.0} + Complex{-0.6, 0.9} * Complex{-0.6, 0.9}), 1e-14);
}

TEST(LogGamma, MatchesReferenceValues) {
  for (const auto& p : reference::kLogGamma) {
    const Complex got = log_gamma(p.arg);
    // Compare log Gamma in absolute terms, scaled to the value's size.
    EXPECT_LT(std::abs(got - p.value), 1e-13 * std::max(1.0, std::abs(p.value)))
        << "arg = " << p.arg;
  }
}

TEST(LogGamma, RejectsNonPositiveRealPart) {
  EXPECT_THROW((void)log_gamma({0.0, 1.0}), DomainError);
  EXPECT_THROW((void)log_gamma({-1.5, 0.0}), DomainError);
}

TEST(LogGamma, SpecialValues) {
  EXPECT_NEAR(log_gamma({0.5, 0.0}).real(), 0.5 * std::log(std::numbers::pi), 1e-15);
  EXPECT_NEAR(log_gamma({1.0, 0.0}).real(), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma({2.0, 0.0}).real(), 0.0, 1e-15);
}

TEST(BesselI, MatchesReferenceValues) {
  for (const auto& p : reference::kBesselI) {
    EXPECT_LT(rel(bessel_i(p.order, p.xi), p.value), 1e-12) << "mu = " << p.order << " xi = " << p.xi;
  }
}

TEST(BesselI, HalfIntegerOrdersAreElementary) {
  for (const double xi : {0.01, 1.0, 7.5, 40.0, 300.0}) {
    const double c = std::sqrt(2.0 / (std::numbers::pi * xi));
    // Scaled forms avoid overflow of sinh at large xi.
    const double sinh_scaled = 0.5 * (1.0 - std::exp(-2.0 * xi));
    const double cosh_scaled = 0.5 * (1.0 + std::exp(-2.0 * xi));
    EXPECT_LT(rel(bessel_i_scaled({0.5, 0.0}, xi), {c * sinh_scaled, 0.0}), 1e-12) << xi;
    EXPECT_LT(rel(bessel_i_scaled({-0.5, 0.0}, xi), {c * cosh_scaled, 0.0}), 1e-12) << xi;
  }
}

TEST(BesselI, ZeroArgument) {
  EXPECT_EQ(bessel_i({0.0, 0.0}, 0.0), Complex(1.0, 0.0));
  EXPECT_EQ(bessel_i({2.5, 1.0}, 0.0), Complex(0.0, 0.0));
  EXPECT_THROW((void)bessel_i({-0.5, 0.0}, 0.0), DomainError);
}

TEST(BesselI, EnforcesDomainAndCaps) {
  EXPECT_THROW((void)bessel_i({-1.0, 0.0}, 1.0), DomainError);
  EXPECT_THROW((void)bessel_i({1.0, 0.0}, -1.0), DomainError);
  KernelConfig cfg;
  cfg.bessel_arg_cap = 60.0;
  EXPECT_THROW((void)bessel_i({1.0, 0.0}, 61.0, cfg), DomainError);
  EXPECT_NO_THROW((void)bessel_i({1.0, 0.0}, 59.0, cfg));
  cfg = {};
  cfg.bessel_term_cap = 3;
  EXPECT_THROW((void)bessel_i({1.0, 0.0}, 50.0, cfg), ConvergenceError);
}

TEST(Kummer, MatchesReferenceValues) {
  for (const auto& p : reference::kKummer) {
    EXPECT_LT(rel(kummer_phi(p.alpha, p.beta, p.x), p.value), 1e-11)
        << "alpha = " << p.alpha << " beta = " << p.beta << " x = " << p.x;
  }
}

TEST(Kummer, ElementaryCases) {
  EXPECT_EQ(kummer_phi({2.0, 1.0}, {3.0, 0.0}, 0.0), Complex(1.0, 0.0));
  for (const double x : {0.1, 5.0, 120.0, 700.0}) {
    EXPECT_LT(rel(kummer_phi({3.3, -1.2}, {3.3, -1.2}, x), {std::exp(x), 0.0}), 1e-12) << x;
    EXPECT_LT(rel(kummer_phi({1.0, 0.0}, {2.0, 0.0}, x), {std::expm1(x) / x, 0.0}), 1e-12) << x;
  }
}

TEST(Kummer, LargeArgumentStaysScaled) {
  // e^{1000} overflows a double; the scaled result carries it in log form.
  const KummerResult r = kummer_phi_detailed({2.0, 0.0}, {2.0, 0.0}, 1000.0);
  EXPECT_NEAR(r.scaled.log().real(), 1000.0, 1e-9);
  EXPECT_GT(r.diagnostics.largest_term_index, 900);
  EXPECT_LT(r.diagnostics.cancellation_ratio, 1.0);
}

TEST(Kummer, RejectsPolesAndReportsNonConvergence) {
  EXPECT_THROW((void)kummer_phi({1.0, 0.0}, {-2.0, 0.0}, 1.0), DomainError);
  EXPECT_THROW((void)kummer_phi({1.0, 0.0}, {0.0, 0.0}, 1.0), DomainError);
  EXPECT_THROW((void)kummer_phi({1.0, 0.0}, {2.0, 0.0}, -1.0), DomainError);
  KernelConfig cfg;
  cfg.kummer_term_cap = 10;
  EXPECT_THROW((void)kummer_phi({1.0, 0.0}, {2.0, 0.0}, 100.0, cfg), ConvergenceError);
}

TEST(Kummer, DiagnosticsFlagCancellation) {
  // Alternating terms for negative alpha: the largest term exceeds the sum.
  const KummerResult r = kummer_phi_detailed({-30.5, 0.0}, {1.5, 0.0}, 20.0);
  EXPECT_GT(r.diagnostics.cancellation_ratio, 1.0);
}
