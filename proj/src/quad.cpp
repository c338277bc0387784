#include "levymax/quad.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "levymax/error.hpp"

namespace levymax {

void TrapezoidGrid::validate() const {
  if (!(zeta > 0.0) || !std::isfinite(zeta)) fail(ErrorKind::domain, "trapezoid grid: zeta must be positive");
  if (n_neg < 0 || n_pos < 0) fail(ErrorKind::domain, "trapezoid grid: negative half-count");
}

namespace {

void check_finite(const cplx& v, int j, double y) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os << "non-finite integrand at node j=" << j << " (y=" << y << ")";
    fail(ErrorKind::numerical, os.str());
  }
}

}  // namespace

cplx trapezoid_sum(const TrapezoidGrid& grid, const std::function<cplx(double)>& g) {
  grid.validate();
  long double re = 0.0L, im = 0.0L;
  for (int j = -grid.n_neg; j <= grid.n_pos; ++j) {
    const double y = grid.node(j);
    const cplx v = g(y);
    check_finite(v, j, y);
    re += v.real();
    im += v.imag();
  }
  return grid.zeta * cplx(static_cast<double>(re), static_cast<double>(im));
}

cplx trapezoid_sum(const TrapezoidGrid& grid, const std::vector<cplx>& values) {
  grid.validate();
  if (static_cast<int>(values.size()) != grid.size()) fail(ErrorKind::domain, "trapezoid_sum: size mismatch");
  long double re = 0.0L, im = 0.0L;
  for (int k = 0; k < grid.size(); ++k) {
    check_finite(values[k], k - grid.n_neg, grid.node(k - grid.n_neg));
    re += values[k].real();
    im += values[k].imag();
  }
  return grid.zeta * cplx(static_cast<double>(re), static_cast<double>(im));
}

double discretization_bound(double zeta, double d, double hardy_norm) {
  const double e = std::exp(-2.0 * std::numbers::pi * d / zeta);
  return hardy_norm * e / (1.0 - e);
}

double step_for_tolerance(const ErrorBudget& b) {
  if (!(b.tol > 0.0) || !(b.d > 0.0) || !(b.hardy_norm_est > 0.0))
    fail(ErrorKind::domain, "step_for_tolerance: tol, d and H must be positive");
  return 2.0 * std::numbers::pi * b.d / std::log1p(b.hardy_norm_est / b.tol);
}

double truncation_half_width(const std::function<double(double)>& envelope, double tol, double zeta,
                             double y_max) {
  if (!(tol > 0.0) || !(zeta > 0.0)) fail(ErrorKind::domain, "truncation_half_width: tol and zeta must be positive");
  // Tail integral by the trapezoid rule on a step comparable to zeta.
  auto tail = [&](double lam) {
    const double h = std::min(zeta, 0.05);
    long double s = 0.5L * envelope(lam);
    double y = lam;
    for (int k = 1; k < 2000000; ++k) {
      y = lam + k * h;
      const double e = envelope(y);
      s += e;
      if (e < 1e-3 * tol * h || y > y_max) break;
    }
    return static_cast<double>(s) * h + zeta * envelope(lam);
  };
  double lo = 0.0, hi = 1.0;
  while (tail(hi) > 0.5 * tol) {
    lo = hi;
    hi *= 2.0;
    if (hi > y_max) return y_max;
  }
  for (int it = 0; it < 60 && hi - lo > 1e-3; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) > 0.5 * tol ? lo : hi) = mid;
  }
  return hi;
}

double estimate_hardy_norm(const std::function<cplx(cplx)>& g, double d, double y_span, int probes) {
  if (probes < 2) probes = 2;
  double peak = 0.0;
  std::vector<double> mags;
  for (int k = 0; k < probes; ++k) {
    const double y = -y_span + 2.0 * y_span * k / (probes - 1);
    const double m = std::max(std::abs(g(cplx(y, d))), std::abs(g(cplx(y, -d))));
    if (std::isfinite(m)) {
      peak = std::max(peak, m);
      mags.push_back(m);
    }
  }
  if (mags.empty()) fail(ErrorKind::numerical, "estimate_hardy_norm: integrand not finite on strip boundary");
  // Integral of the piecewise-linear envelope through the probes, both boundaries.
  double integral = 0.0;
  const double h = 2.0 * y_span / (probes - 1);
  for (std::size_t k = 0; k + 1 < mags.size(); ++k) integral += 0.5 * h * (mags[k] + mags[k + 1]);
  return std::max(2.0 * integral, peak);
}

cplx sum_by_parts(const TrapezoidGrid& grid, double a, const std::vector<cplx>& g, int n) {
  grid.validate();
  if (n < 1) fail(ErrorKind::domain, "sum_by_parts: n_iters must be >= 1");
  const cplx ph = std::exp(cplx(0.0, a * grid.zeta)) - 1.0;
  if (std::abs(ph) < 1e-8) fail(ErrorKind::numerical, "sum_by_parts: resonant phase, e^{i a zeta} is 1");
  const int m = grid.size();
  if (static_cast<int>(g.size()) < m + n) fail(ErrorKind::domain, "sum_by_parts: need n_iters extra samples");
  std::vector<cplx> diff(g.begin(), g.begin() + m + n);
  for (int it = 0; it < n; ++it)
    for (int k = 0; k + 1 < static_cast<int>(diff.size()) - it; ++k) diff[k] = diff[k + 1] - diff[k];
  long double re = 0.0L, im = 0.0L;
  for (int k = 0; k < m; ++k) {
    const double y = grid.node(k - grid.n_neg);
    const cplx t = std::exp(cplx(0.0, -a * y)) * diff[k];
    re += t.real();
    im += t.imag();
  }
  return grid.zeta / std::pow(ph, n) * cplx(static_cast<double>(re), static_cast<double>(im));
}

}  // namespace levymax
