#pragma once

#include <cstdint>
#include <string>

#include "levymax/models.hpp"
#include "levymax/quad.hpp"

namespace levymax {

struct OracleReport {
  std::string method;
  double value = 0.0;
  double est_error = 0.0;
  double cost = 0.0;  // nodes or paths
};

// P[X_T <= a1, max_{t<=T} X_t <= a2] for X_t = mu t + sigma W_t
double bm_joint_cdf(double sigma, double mu, double T, double a1, double a2);
double bm_no_touch(double sigma, double mu, double T, double a2);

// E[(e^{beta (x1 + X_T)} - e^{max(x2, x1 + max X)})_+] by 2D quadrature of the joint density
OracleReport bm_exchange(double sigma, double mu, double T, double x1, double x2, double beta, double tol = 1e-11);

struct FlatOptions {
  double h = 0.2;      // node spacing on both lines
  double L = 400.0;    // half-length of the lines
  int n_parts = 4;     // summation by parts iterations
  double rel_tol = 1e-10;  // truncation of the factor line
  long max_nodes = 10'000'000;
};

// Transform of the joint cpdf on horizontal lines Im = mu+/2 and mu-/2, no
// deformation. Requires x1 != a1 and x1 < a2 <= ... (oscillating sums).
OracleReport flat_contour_cpdf_laplace(const LevyModel& model, double q, double x1, double x2, double a1, double a2,
                                       const FlatOptions& opts = {});

struct McOptions {
  long n_paths = 100000;
  int n_steps = 200;
  double jump_cutoff = 1e-3;
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

// Small jumps replaced by a Gaussian, large jumps compound Poisson; the maximum
// inside each step is a Brownian-bridge draw for the Gaussian part.
OracleReport mc_joint_cdf(const LevyModel& model, double T, double a1, double a2, const McOptions& opts = {});

}  // namespace levymax
