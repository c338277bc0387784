#include <gtest/gtest.h>

#include <cmath>

#include "levymax/contours.hpp"
#include "levymax/error.hpp"
#include "levymax/laplace.hpp"
#include "levymax/models.hpp"

using namespace levymax;

namespace {

BromwichContour bromwich(double T, double tol) {
  RegularityProfile p;
  ContourOptions o;
  o.T = T;
  o.rule = AngleRule::family_II;
  o.sigma_floor = 0.1;
  return select_bromwich(p, tol, o);
}

}  // namespace

TEST(Laplace, GwrNodes) {
  GwrScheme s{8, 0.3, 2.0};
  auto n = gwr_nodes(s);
  ASSERT_EQ(n.size(), 16u);
  for (int k = 1; k <= 16; ++k) EXPECT_NEAR(n[k - 1], k * std::log(2.0) / 2.0 + 0.3, 1e-15);
}

TEST(Laplace, GwrOnElementaryTransforms) {
  for (double T : {0.05, 0.25, 1.0}) {
    GwrScheme s{8, 0.0, T};
    EXPECT_NEAR(invert_gwr(s, [](double q) { return 1.0 / q; }), 1.0, 1e-7) << T;
    EXPECT_NEAR(invert_gwr(s, [](double q) { return 1.0 / (q + 1.0); }), std::exp(-T), 1e-7) << T;
  }
}

// at T = 5 the truncation error of the M = 8 scheme on e^{-t} is a few 1e-7
TEST(Laplace, GwrLongerHorizon) {
  GwrScheme s{8, 0.0, 5.0};
  EXPECT_NEAR(invert_gwr(s, [](double q) { return 1.0 / (q + 1.0); }), std::exp(-5.0), 1e-6);
  EXPECT_NEAR(invert_gwr(s, [](double q) { return 1.0 / q; }), 1.0, 1e-7);
}

TEST(Laplace, GwrErrorShrinksWithM) {
  const double T = 1.0;
  auto err = [&](int M) {
    GwrScheme s{M, 0.0, T};
    return std::abs(invert_gwr(s, [](double q) { return 1.0 / ((q + 1.0) * (q + 1.0)); }) - T * std::exp(-T));
  };
  EXPECT_LT(err(8), err(6));
  EXPECT_LT(err(8), 1e-7);
}

TEST(Laplace, GaverStehfest) {
  auto z = gaver_stehfest_coefficients(4);
  ASSERT_EQ(z.size(), 8u);
  EXPECT_NEAR(invert_gaver_stehfest(7, 2.0, [](double q) { return 1.0 / q; }), 1.0, 1e-6);
  EXPECT_NEAR(invert_gaver_stehfest(7, 1.0, [](double q) { return 1.0 / (q + 1.0); }), std::exp(-1.0), 1e-5);
}

TEST(Laplace, BromwichOnElementaryTransforms) {
  for (double T : {0.05, 0.25, 1.0, 15.0}) {
    auto c = bromwich(T, 1e-13);
    EXPECT_NEAR(invert_sinh_bromwich(c, [](cplx q) { return 1.0 / q; }, T), 1.0, 1e-12) << T;
    EXPECT_NEAR(invert_sinh_bromwich(c, [](cplx q) { return 1.0 / (q + 1.0); }, T), std::exp(-T), 1e-12) << T;
    EXPECT_NEAR(invert_sinh_bromwich(c, [](cplx q) { return 1.0 / (q * q); }, T), T, 1e-12 * (1 + T)) << T;
  }
}

TEST(Laplace, BromwichCombineMatchesInvert) {
  const double T = 0.7;
  auto c = bromwich(T, 1e-12);
  std::vector<cplx> vals;
  for (auto q : c.nodes) vals.push_back(1.0 / (q + 2.0));
  EXPECT_NEAR(bromwich_combine(c, T, vals), invert_sinh_bromwich(c, [](cplx q) { return 1.0 / (q + 2.0); }, T),
              1e-15);
  EXPECT_NEAR(bromwich_combine(c, T, vals), std::exp(-2 * T), 1e-12);
}

TEST(Laplace, BadSchemeRejected) {
  GwrScheme s{0, 0.0, 1.0};
  EXPECT_THROW(s.validate(), Error);
  GwrScheme t{8, 0.0, -1.0};
  EXPECT_THROW(t.validate(), Error);
}
