#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace levymax {

using cplx = std::complex<double>;

// Uniform grid y_j = offset + j*zeta, j in [-n_neg, n_pos].
struct TrapezoidGrid {
  double zeta = 0.1;
  int n_neg = 0;
  int n_pos = 0;
  double offset = 0.0;

  double node(int j) const { return offset + j * zeta; }
  int size() const { return n_neg + n_pos + 1; }
  void validate() const;
};

struct ErrorBudget {
  double tol = 1e-12;
  double d = 0.5;               // strip half-width in the y variable
  double hardy_norm_est = 1.0;  // estimate of H(g, d)
};

// zeta * sum_j g(y_j), ascending j, accumulated in long double.
cplx trapezoid_sum(const TrapezoidGrid& grid, const std::function<cplx(double)>& g);

// Same, for values already sampled at the grid nodes.
cplx trapezoid_sum(const TrapezoidGrid& grid, const std::vector<cplx>& values);

// Discretization bound H e^{-2 pi d/zeta} / (1 - e^{-2 pi d/zeta}).
double discretization_bound(double zeta, double d, double hardy_norm);

// Largest zeta with discretization_bound(zeta) <= tol.
double step_for_tolerance(const ErrorBudget& budget);

// Smallest Lambda with  int_Lambda^inf env + zeta*env(Lambda) <= tol/2,
// for a nonincreasing envelope env(y) >= |g(y)| on y >= 0.
double truncation_half_width(const std::function<double(double)>& envelope, double tol, double zeta,
                             double y_max = 1e4);

// max |g| over probe points on the two strip boundaries Im y = +-d, times the
// integral of the decay envelope fitted through those probes.
double estimate_hardy_norm(const std::function<cplx(cplx)>& g, double d, double y_span, int probes = 21);

// zeta/(e^{i a zeta}-1)^n * sum_j e^{-i a y_j} Delta^n g_j over the grid.
// g_values[k] holds g at j = -n_neg + k and must extend n_iters nodes past n_pos.
cplx sum_by_parts(const TrapezoidGrid& grid, double a, const std::vector<cplx>& g_values, int n_iters);

}  // namespace levymax
