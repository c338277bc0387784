#include <gtest/gtest.h>

#include <boost/math/distributions/normal.hpp>
#include <cmath>

#include "levymax/oracle.hpp"

using namespace levymax;

namespace {
double Phi(double x) { return boost::math::cdf(boost::math::normal(), x); }
}  // namespace

TEST(Oracle, ReflectionLimits) {
  const double s = 0.3, mu = 0.1, T = 0.7;
  // a2 large: marginal of X_T
  EXPECT_NEAR(bm_joint_cdf(s, mu, T, 0.05, 50.0), Phi((0.05 - mu * T) / (s * std::sqrt(T))), 1e-15);
  // a1 >= a2 collapses to no-touch
  EXPECT_NEAR(bm_joint_cdf(s, mu, T, 0.3, 0.2), bm_no_touch(s, mu, T, 0.2), 1e-15);
  EXPECT_EQ(bm_joint_cdf(s, mu, T, 0.0, -0.1), 0.0);
  // driftless no-touch: 2 Phi(a/(s sqrt T)) - 1
  EXPECT_NEAR(bm_no_touch(s, 0.0, T, 0.2), 2 * Phi(0.2 / (s * std::sqrt(T))) - 1, 1e-15);
}

TEST(Oracle, ReflectionDensityIntegratesToCdf) {
  // d/da2 of the joint cdf is nonnegative, d/da1 too
  const double s = 0.2, mu = -0.05, T = 1.0;
  double prev = 0.0;
  for (double a2 = 0.0; a2 < 0.6; a2 += 0.05) {
    double v = bm_joint_cdf(s, mu, T, 0.0, a2);
    EXPECT_GE(v, prev - 1e-15);
    prev = v;
  }
}

TEST(Oracle, ExchangeQuadratureIsNonnegativeAndSmallAtShortT) {
  auto a = bm_exchange(0.3, 0.0, 0.5, 0.0, 0.0, 2.0);
  EXPECT_GT(a.value, 0.0);
  EXPECT_LT(a.est_error, 1e-9);
  auto b = bm_exchange(0.3, 0.0, 1e-4, 0.0, 0.0, 2.0);
  EXPECT_LT(b.value, 1e-2 * a.value);
}

// x1 = x2 = 0, beta -> infinity is not available; use beta = 1: (e^X - e^M)_+ = 0
TEST(Oracle, ExchangeVanishesForUnitBeta) {
  auto r = bm_exchange(0.3, 0.05, 1.0, 0.0, 0.0, 1.0);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(Oracle, MonteCarloBrownianWithinStandardError) {
  auto m = make_brownian(0.3, 0.05);
  McOptions o;
  o.n_paths = 40000;
  o.n_steps = 50;
  auto r = mc_joint_cdf(m, 0.5, 0.0, 0.15, o);
  double ex = bm_joint_cdf(0.3, 0.05, 0.5, 0.0, 0.15);
  EXPECT_LT(std::abs(r.value - ex), 4 * r.est_error + 1e-3);
  EXPECT_EQ(r.cost, 40000);
}

TEST(Oracle, MonteCarloSeedDeterminism) {
  auto m = make_kobol_m2(0.1, 0.7, 1.0, -2.0);
  McOptions o;
  o.n_paths = 2000;
  o.n_steps = 20;
  auto a = mc_joint_cdf(m, 0.25, 0.0, 0.1, o), b = mc_joint_cdf(m, 0.25, 0.0, 0.1, o);
  EXPECT_EQ(a.value, b.value);
  o.seed += 1;
  auto c = mc_joint_cdf(m, 0.25, 0.0, 0.1, o);
  EXPECT_NE(a.value, c.value);
}

TEST(Oracle, MonteCarloKobolRoughlyMatchesPrintedValue) {
  // nu = 1.2, T = 1, a1 = 0, a2 = 0.1 printed as 0.440836201412271
  auto m = make_kobol_m2(0.1, 1.2, 1.0, -2.0);
  McOptions o;
  o.n_paths = 20000;
  o.n_steps = 100;
  auto r = mc_joint_cdf(m, 1.0, 0.0, 0.1, o);
  EXPECT_LT(std::abs(r.value - 0.440836201412271), 5 * r.est_error + 0.01);
}
