#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "asianlt/errors.hpp"
#include "asianlt/transform_core.hpp"
#include "reference_values.hpp"

using namespace asianlt;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// The published ν = -2 and ν = -3 expressions, evaluated just off the pole
// where they are written.
Complex second_moment_at_minus_two(double x, Complex nu) {
  return 2.0 / (2.0 * (nu + 1.0)) * std::exp(2.0 * x * (nu + 1.0)) *
             (std::exp(2.0 * x * (nu + 3.0)) - 1.0) / (2.0 * (nu + 3.0)) -
         2.0 * x / (2.0 * (nu + 1.0));
}

Complex second_moment_at_minus_three(double x, Complex nu) {
  return 2.0 * x / (2.0 * (nu + 1.0)) * std::exp(2.0 * x * (nu + 1.0)) -
         2.0 / (2.0 * (nu + 1.0)) * (std::exp(4.0 * x * (nu + 2.0)) - 1.0) / (4.0 * (nu + 2.0));
}

}  // namespace

TEST(FirstMoment, ClosedFormValues) {
  EXPECT_NEAR(first_moment(0.5, {-1.0, 0.0}).real(), 0.5, 1e-16);
  EXPECT_NEAR(first_moment(0.1, {0.0, 0.0}).real(), 0.5 * std::expm1(0.2), 1e-16);
  EXPECT_NEAR(first_moment(0.1, {0.0, 0.0}).real(), 0.1107014, 1e-7);
  const Complex nu{0.3, -0.8};
  EXPECT_LT(rel(first_moment(0.7, nu), (std::exp(1.4 * (nu + 1.0)) - 1.0) / (2.0 * (nu + 1.0))), 1e-14);
}

TEST(FirstMoment, SeriesBranchNearMinusOne) {
  const double x = 1.0;
  const Complex nu{-1.0 + 1e-9, 0.0};
  // Two-term expansion x (1 + x(nu+1)) is exact to O(1e-18) here.
  const Complex expected = x * (1.0 + x * (nu + 1.0));
  EXPECT_LT(rel(first_moment(x, nu), expected), 1e-12);
}

TEST(SecondMoment, MatchesTwoDimensionalQuadrature) {
  for (const auto& p : reference::kSecondMoment) {
    EXPECT_LT(rel(second_moment(p.x, p.nu), p.value), 1e-11) << "x = " << p.x << " nu = " << p.nu;
  }
}

TEST(SecondMoment, ZeroDriftValue) {
  // (e^{0.2} (e^{0.6} - 1)/6 - (e^{0.8} - 1)/8) at x = 0.1.
  const double expected = std::exp(0.2) * std::expm1(0.6) / 6.0 - std::expm1(0.8) / 8.0;
  EXPECT_NEAR(second_moment(0.1, {0.0, 0.0}).real(), expected, 1e-15);
  EXPECT_NEAR(second_moment(0.1, {0.0, 0.0}).real(), 0.01416375, 1e-8);
}

TEST(SecondMoment, AgreesWithSpecialExpressionsAtMinusTwoAndMinusThree) {
  for (const double x : {0.05, 0.25, 1.0}) {
    EXPECT_LT(rel(second_moment(x, {-2.0, 0.0}), second_moment_at_minus_two(x, {-2.0, 0.0})), 1e-12);
    EXPECT_LT(rel(second_moment(x, {-3.0, 0.0}), second_moment_at_minus_three(x, {-3.0, 0.0})), 1e-12);
    // Both are limits of the general formula.
    EXPECT_LT(rel(second_moment(x, {-2.0 + 1e-3, 0.0}), second_moment(x, {-2.0, 0.0})), 1e-2);
  }
}

TEST(SecondMoment, LimitAtMinusOneIsTheNearbyValue) {
  for (const double x : {0.05, 0.25, 1.0}) {
    const Complex at = second_moment(x, {-1.0, 0.0});
    const Complex near = second_moment(x, {-1.0 + 1e-3, 0.0});
    const Complex near2 = second_moment(x, {-1.0 - 1e-3, 0.0});
    // Symmetric difference kills the linear term.
    EXPECT_LT(rel(0.5 * (near + near2), at), 1e-5) << x;
  }
}

TEST(SecondMoment, DominatesSquaredFirstMoment) {
  for (const double nu : {-3.0, -2.0, -1.0, -0.6, 0.0, 3.0}) {
    for (const double x : {0.05, 0.25, 2.0}) {
      const double m1 = first_moment(x, {nu, 0.0}).real();
      EXPECT_GT(second_moment(x, {nu, 0.0}).real(), m1 * m1);
    }
  }
}

TEST(Moments, ContinuousAcrossSeams) {
  const MomentConfig cfg;
  const double r = cfg.singularity_radius;
  for (const double x : {0.05, 0.25, 1.0, 3.0}) {
    for (const double pole : {-1.0, -2.0, -3.0}) {
      for (const double side : {-1.0, 1.0}) {
        const Complex inside{pole + side * r * (1.0 - 1e-9), 0.0};
        const Complex outside{pole + side * r * (1.0 + 1e-9), 0.0};
        EXPECT_LT(rel(second_moment(x, inside), second_moment(x, outside)), 1e-8)
            << "x = " << x << " pole = " << pole;
        if (pole == -1.0) {
          EXPECT_LT(rel(first_moment(x, inside), first_moment(x, outside)), 1e-12);
        }
      }
    }
  }
}

TEST(WeberClosed, MatchesReferenceValues) {
  for (const auto& p : reference::kWeber) {
    EXPECT_LT(rel(weber_d_closed(p.a, p.nu, p.z), p.d), 1e-10)
        << "a = " << p.a << " nu = " << p.nu << " z = " << p.z;
  }
}

TEST(WeberQuadrature, MatchesReferenceValues) {
  for (const auto& p : reference::kWeber) {
    if (std::abs(p.z.imag()) > 1000.0) continue;  // contour-scale node, closed form only
    EXPECT_LT(rel(weber_d_quadrature(p.a, p.nu, p.z), p.d), 1e-9)
        << "a = " << p.a << " nu = " << p.nu << " z = " << p.z;
  }
}

TEST(WeberQuadrature, NamedExamples) {
  EXPECT_LT(rel(weber_d_quadrature(8, {3.0, 0.0}, {10.0, 0.0}), weber_d_closed(8, {3.0, 0.0}, {10.0, 0.0})), 1e-8);
  EXPECT_LT(rel(weber_d_quadrature(1, {0.5, 0.0}, {4.0, 3.0}), weber_d_closed(1, {0.5, 0.0}, {4.0, 3.0})), 1e-8);
  EXPECT_LT(rel(weber_d_quadrature(0.0625, {-0.6, 0.0}, {6.0, 0.0}),
                weber_d_closed(0.0625, {-0.6, 0.0}, {6.0, 0.0})), 1e-8);
}

TEST(WeberQuadrature, UpperLimitCoversSmallStrikes) {
  // With a = 0.01 the integrand peaks near x = 1; a Gaussian envelope centred
  // at 0 would cut it off.
  const QuadratureResult r = weber_d_quadrature_detailed(0.01, {0.0, 0.0}, {6.0, 0.0});
  EXPECT_GT(r.upper_limit, 1.5);
  EXPECT_LT(r.error_estimate, 1e-9 * std::abs(r.value));
}

TEST(WeberClosed, DomainChecks) {
  EXPECT_THROW((void)weber_d_closed(0.0, {0.0, 0.0}, {8.0, 0.0}), DomainError);
  EXPECT_THROW((void)weber_d_closed(1.0, {0.0, 0.0}, {1.9, 0.0}), DomainError);
  EXPECT_THROW((void)weber_d_closed(1.0, {0.0, 1.5}, {8.0, 0.0}), DomainError);
  EXPECT_THROW((void)weber_d_quadrature(-1.0, {0.0, 0.0}, {8.0, 0.0}), DomainError);
}

TEST(WeberClosed, DecaysAsStrikeGrows) {
  double previous = std::abs(weber_d_closed(8.0, {0.0, 0.0}, {8.0, 0.0}));
  for (double a = 16.0; a < 1e5; a *= 2.0) {
    const double current = std::abs(weber_d_closed(a, {0.0, 0.0}, {8.0, 0.0}));
    EXPECT_LT(current, previous) << a;
    previous = current;
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(TransformEvaluator, Abscissae) {
  const TransformEvaluator pos(0.0025, {3.0, 0.0});
  EXPECT_DOUBLE_EQ(pos.finiteness_abscissa(), 8.0);
  EXPECT_DOUBLE_EQ(pos.identity_abscissa(), 8.0);
  const TransformEvaluator neg(0.0625, {-0.6, 0.0});
  EXPECT_DOUBLE_EQ(neg.finiteness_abscissa(), 0.8);
  EXPECT_DOUBLE_EQ(neg.identity_abscissa(), 4.0);
  EXPECT_DOUBLE_EQ(neg.validity_abscissa(), 4.0);
  const TransformEvaluator deep(0.1, {-3.0, 0.0});
  EXPECT_DOUBLE_EQ(deep.finiteness_abscissa(), 0.0);
  const TransformEvaluator cplx(0.1, {0.5, 0.8});
  EXPECT_NEAR(cplx.finiteness_abscissa(), 3.32, 1e-15);
  EXPECT_DOUBLE_EQ(cplx.identity_abscissa(), 4.0);
  const TransformEvaluator cplx_hi(0.1, {2.0, 1.0});
  EXPECT_DOUBLE_EQ(cplx_hi.identity_abscissa(), cplx_hi.finiteness_abscissa());
}

TEST(TransformEvaluator, GatesBelowTheValidityAbscissa) {
  const TransformEvaluator eval(0.0025, {3.0, 0.0});
  EXPECT_FALSE(eval.in_domain({7.9, 0.0}));
  EXPECT_FALSE(eval.in_domain({8.0, 100.0}));
  try {
    (void)laplace_f(eval, {7.9, 0.0});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("finiteness"), std::string::npos);
    EXPECT_NE(msg.find("identity"), std::string::npos);
  }
  const TransformEvaluator neg(0.0625, {-0.6, 0.0});
  EXPECT_THROW((void)neg({3.9, 0.0}), DomainError);
  EXPECT_NO_THROW((void)neg({4.5, 0.0}));
}

TEST(TransformEvaluator, RejectsInvalidParameters) {
  EXPECT_THROW(TransformEvaluator(0.0, {0.0, 0.0}), DomainError);
  EXPECT_THROW(TransformEvaluator(-1.0, {0.0, 0.0}), DomainError);
  EXPECT_THROW(TransformEvaluator(1.0, {0.0, 1.2}), DomainError);
}

TEST(LaplaceF, MatchesReferenceValues) {
  for (const auto& p : reference::kWeber) {
    const TransformEvaluator eval(p.a, p.nu);
    if (!eval.in_domain(p.z)) continue;
    EXPECT_LT(rel(laplace_f(eval, p.z), p.f), 1e-10) << "a = " << p.a << " z = " << p.z;
  }
}

TEST(LaplaceF, DecaysAlongTheRealAxis) {
  for (const auto& [a, nu, z0] : {std::tuple{0.0025, 3.0, 8.5}, std::tuple{0.0625, -0.6, 4.2}}) {
    const TransformEvaluator eval(a, {nu, 0.0});
    double previous = std::abs(eval({z0, 0.0}));
    for (double z = z0 + 0.5; z < 2000.0; z *= 1.5) {
      const double current = std::abs(eval({z, 0.0}));
      EXPECT_LT(current, previous) << "z = " << z;
      previous = current;
    }
    EXPECT_LT(previous, 1e-6);
  }
}
