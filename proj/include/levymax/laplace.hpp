#pragma once

#include <functional>
#include <string>
#include <vector>

#include "levymax/contours.hpp"
#include "levymax/quad.hpp"

namespace levymax {

struct GwrScheme {
  int M = 8;
  double shift_a = 0.0;
  double T = 1.0;
  void validate(std::string* warning = nullptr) const;
};

// The 2M sample points k ln2/T + a, k = 1..2M.
std::vector<double> gwr_nodes(const GwrScheme& scheme);

// Combines transform values at gwr_nodes into V(T). Any fallback in the rho
// recursion is reported through warning.
double gwr_combine(const GwrScheme& scheme, const std::vector<double>& values, std::string* warning = nullptr);

double invert_gwr(const GwrScheme& scheme, const std::function<double(double)>& transform,
                  std::string* warning = nullptr);

// Stehfest-form weights zeta_k, k = 1..2M
std::vector<double> gaver_stehfest_coefficients(int M);
double invert_gaver_stehfest(int M, double T, const std::function<double(double)>& transform);

// (zeta/pi) Re sum_{j>=0} w_j e^{q_j T} F(q_j) q'(y_j)/i, w_0 = 1/2
double bromwich_combine(const BromwichContour& contour, double T, const std::vector<cplx>& values);

double invert_sinh_bromwich(const BromwichContour& contour, const std::function<cplx(cplx)>& transform, double T);

}  // namespace levymax
