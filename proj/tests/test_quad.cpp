#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "levymax/error.hpp"
#include "levymax/quad.hpp"

using namespace levymax;

namespace {

TrapezoidGrid grid(double zeta, double L) {
  TrapezoidGrid g;
  g.zeta = zeta;
  g.n_neg = g.n_pos = static_cast<int>(std::ceil(L / zeta));
  return g;
}

}  // namespace

TEST(Quad, GaussianIntegral) {
  auto g = grid(0.5, 12.0);
  cplx s = trapezoid_sum(g, [](double y) { return cplx(std::exp(-y * y)); });
  EXPECT_NEAR(s.real(), std::sqrt(std::numbers::pi), 1e-14);
}

TEST(Quad, SampledAndFunctionalSumsAgree) {
  auto g = grid(0.3, 9.0);
  std::vector<cplx> v;
  for (int j = -g.n_neg; j <= g.n_pos; ++j) v.push_back(std::exp(cplx(-g.node(j) * g.node(j), g.node(j))));
  cplx a = trapezoid_sum(g, v);
  cplx b = trapezoid_sum(g, [](double y) { return std::exp(cplx(-y * y, y)); });
  EXPECT_EQ(a, b);
}

// sech(y) is analytic in |Im y| < pi/2; halving zeta squares the error factor
TEST(Quad, DiscretizationErrorShrinksAsPredicted) {
  const double exact = std::numbers::pi;
  auto err = [&](double zeta) {
    auto g = grid(zeta, 60.0);
    return std::abs(trapezoid_sum(g, [](double y) { return cplx(1.0 / std::cosh(y)); }).real() - exact);
  };
  double e1 = err(1.0), e2 = err(0.5);
  double d = 1.5;
  EXPECT_LT(e1, discretization_bound(1.0, d, 10.0));
  EXPECT_LT(e2, discretization_bound(0.5, d, 10.0));
  EXPECT_LT(e2, 1e-3 * e1);
  // e(zeta) ~ e^{-2 pi d / zeta} with d = pi/2
  EXPECT_NEAR(std::log(e1 / e2), std::numbers::pi * std::numbers::pi, 0.1 * std::numbers::pi * std::numbers::pi);
}

TEST(Quad, StepForToleranceMeetsBound) {
  for (double tol : {1e-6, 1e-10, 1e-14}) {
    ErrorBudget b{tol, 0.4, 7.0};
    double z = step_for_tolerance(b);
    EXPECT_LE(discretization_bound(z, b.d, b.hardy_norm_est), tol * (1 + 1e-9));
    EXPECT_GT(discretization_bound(1.05 * z, b.d, b.hardy_norm_est), tol);
  }
}

TEST(Quad, TruncationHalfWidth) {
  auto env = [](double y) { return std::exp(-y); };
  double L = truncation_half_width(env, 1e-10, 0.1);
  EXPECT_LE(std::exp(-L) * 1.1, 0.5e-10 * 1.0001);
  EXPECT_GT(L, 20.0);
  EXPECT_LT(L, 30.0);
}

TEST(Quad, DoublingNChangesLittle) {
  auto env = [](double y) { return std::exp(-y * y); };
  double zeta = 0.4;
  double L = truncation_half_width(env, 1e-12, zeta);
  auto g1 = grid(zeta, L), g2 = grid(zeta, 2 * L);
  auto f = [](double y) { return cplx(std::exp(-y * y) * std::cos(y)); };
  EXPECT_LT(std::abs(trapezoid_sum(g1, f) - trapezoid_sum(g2, f)), 1e-12);
}

// sum e^{-i a y} g(y) for g = Gaussian has the closed form sqrt(pi) e^{-a^2/4}
TEST(Quad, SumByPartsMatchesFourierTransform) {
  auto g = grid(0.1, 10.0);
  const int n = 3;
  for (double a : {0.7, 3.0, 11.0}) {
    std::vector<cplx> v;
    for (int j = -g.n_neg; j <= g.n_pos + n; ++j) v.push_back(std::exp(-g.node(j) * g.node(j)));
    cplx s = sum_by_parts(g, a, v, n);
    EXPECT_NEAR(s.real(), std::sqrt(std::numbers::pi) * std::exp(-a * a / 4), 1e-10) << a;
    EXPECT_NEAR(s.imag(), 0.0, 1e-10) << a;
  }
}

TEST(Quad, HardyNormBoundsStripValues) {
  auto f = [](cplx y) { return 1.0 / std::cosh(y); };
  double h = estimate_hardy_norm(f, 1.0, 30.0);
  EXPECT_GT(h, 2.0);  // integral of |sech| on one boundary line exceeds pi
  EXPECT_TRUE(std::isfinite(h));
}

TEST(Quad, InvalidGridRejected) {
  TrapezoidGrid g;
  g.zeta = -1.0;
  EXPECT_THROW(g.validate(), Error);
}
