#include "levymax/contours.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "levymax/error.hpp"

namespace levymax {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

int half_count(double lambda, double zeta) { return std::max(1, static_cast<int>(std::ceil(lambda / zeta))); }

}  // namespace

double SinhContour::apex() const { return omega1 + b * std::sin(omega); }

cplx SinhContour::at(cplx y) const { return I * omega1 + b * std::sinh(I * omega + y); }

cplx SinhContour::der_at(cplx y) const { return b * std::cosh(I * omega + y); }

SinhContour SinhContour::make(double omega1, double b, double omega, double d, const TrapezoidGrid& grid) {
  if (!(b > 0.0)) fail(ErrorKind::domain, "sinh contour: b must be positive");
  if (!(std::abs(omega) < pi / 2)) fail(ErrorKind::domain, "sinh contour: |omega| must be below pi/2");
  grid.validate();
  SinhContour c;
  c.omega1 = omega1;
  c.b = b;
  c.omega = omega;
  c.d = d;
  c.grid = grid;
  c.nodes.reserve(grid.size());
  c.ders.reserve(grid.size());
  for (int j = -grid.n_neg; j <= grid.n_pos; ++j) {
    const cplx w = I * omega + grid.node(j);
    c.nodes.push_back(I * omega1 + b * std::sinh(w));
    c.ders.push_back(b * std::cosh(w));
  }
  return c;
}

SinhContour SinhContour::from_band(double lo, double hi, double omega, double d, const TrapezoidGrid& grid) {
  if (!(lo < hi)) fail(ErrorKind::domain, "sinh contour: empty band");
  if (!(d > 0.0) || std::abs(omega) + d >= pi / 2)
    fail(ErrorKind::domain, "sinh contour: need d > 0 and |omega| + d < pi/2");
  const double s1 = std::sin(omega + d), s0 = std::sin(omega - d);
  const double b = (hi - lo) / (s1 - s0);
  const double omega1 = (lo * s1 - hi * s0) / (s1 - s0);
  return make(omega1, b, omega, d, grid);
}

BromwichContour BromwichContour::make(double sigma, double b, double omega, double d, const TrapezoidGrid& grid) {
  if (!(b > 0.0)) fail(ErrorKind::domain, "Bromwich contour: b must be positive");
  if (!(omega > 0.0 && omega < pi / 2)) fail(ErrorKind::domain, "Bromwich contour: omega must lie in (0, pi/2)");
  if (!(sigma - b * std::sin(omega) > 0.0))
    fail(ErrorKind::domain, "Bromwich contour: sigma - b sin(omega) must be positive");
  if (grid.n_neg != 0) fail(ErrorKind::domain, "Bromwich contour: grid covers y >= 0 only");
  grid.validate();
  BromwichContour c;
  c.sigma = sigma;
  c.b = b;
  c.omega = omega;
  c.d = d;
  c.grid = grid;
  for (int j = 0; j <= grid.n_pos; ++j) {
    const cplx w = I * omega + grid.node(j);
    c.nodes.push_back(sigma + I * b * std::sinh(w));
    c.ders.push_back(I * b * std::cosh(w));
  }
  return c;
}

double rule_angle(const RegularityProfile& p, AngleRule rule) {
  const double f = std::min(1.0, 1.0 / p.nu);
  switch (rule) {
    case AngleRule::automatic:
      return p.signed_sl ? pi / 8 : (p.is_sl ? f * pi / 4 : pi / 8);
    case AngleRule::sl:
      return f * pi / 4;
    case AngleRule::signed_sl:
      return pi / 8;
    case AngleRule::family_I:
      return f * pi / 9;
    case AngleRule::family_II:
      return f * pi / 10;
  }
  return f * pi / 4;
}

double rule_bromwich_angle(AngleRule rule) { return rule == AngleRule::family_I ? pi / 18 : pi / 20; }

SinhContour select_params(const RegularityProfile& p, ContourRole role, double tol, const ContourOptions& o) {
  if (!(tol > 0.0)) fail(ErrorKind::domain, "select_params: tol must be positive");
  if (role == ContourRole::bromwich) fail(ErrorKind::domain, "select_params: use select_bromwich for the q contour");
  if (p.gamma_prime_minus == 0.0 || p.gamma_prime_plus == 0.0)
    fail(ErrorKind::unsupported, "one-sided positivity cone: sinh deformation in one direction is not available");
  if (!(p.mu_minus < 0.0 && p.mu_plus > 0.0))
    fail(ErrorKind::unsupported, "strip of analyticity must contain 0 in its interior");

  const double w = o.omega ? std::abs(*o.omega) : rule_angle(p, o.rule);
  const double lo_frac = o.band_lo_frac, hi_frac = o.band_hi_frac;
  const double nu = std::max(p.nu, 0.05);

  bool plus = role == ContourRole::xi_plus || (role == ContourRole::one_dim && o.one_dim_sign > 0);
  const bool midpoint = role == ContourRole::one_dim && o.one_dim_sign == 0;

  double lo, hi, omega, d;
  if (midpoint) {
    omega = 0.0;
    d = w;
    lo = lo_frac * p.mu_plus;
    hi = hi_frac * p.mu_plus;
  } else {
    omega = plus ? w : -w;
    d = 0.9 * w;
    lo = plus ? lo_frac * p.mu_plus : hi_frac * p.mu_minus;
    hi = plus ? hi_frac * p.mu_plus : lo_frac * p.mu_minus;
  }
  if (o.band_lo) lo = *o.band_lo;
  if (o.band_hi) hi = *o.band_hi;

  const double zeta = o.zeta ? *o.zeta : step_for_tolerance({tol, d, o.hardy_norm});
  double lambda;
  if (midpoint) {
    // no oscillation: the integrand decays only like |chi|^{-nu}
    lambda = truncation_half_width([nu](double y) { return 2.0 * std::exp(-nu * y); }, tol, zeta, 2e3);
  } else {
    // the Cauchy kernel decays like e^{-|y|}, the logarithm grows like nu |y|
    lambda = truncation_half_width([nu](double y) { return (1.0 + nu * y) * std::exp(-y); }, tol, zeta);
  }
  TrapezoidGrid g;
  g.zeta = zeta;
  g.n_neg = g.n_pos = o.n_half ? *o.n_half : half_count(lambda, zeta);
  return SinhContour::from_band(lo, hi, omega, d, g);
}

BromwichContour select_bromwich(const RegularityProfile& p, double tol, const ContourOptions& o) {
  (void)p;
  if (!(o.T > 0.0)) fail(ErrorKind::domain, "Bromwich contour: T must be positive");
  if (!(tol > 0.0)) fail(ErrorKind::domain, "Bromwich contour: tol must be positive");
  const double s = 1.0, kappa = 0.3;
  const double w = o.omega ? *o.omega : rule_bromwich_angle(o.rule);
  const double sT = s / o.T;
  const double sigma = std::max(0.0, o.sigma_floor) + sT;
  const double b = (1.0 - kappa) * sT / std::sin(2.0 * w);
  const double d = w;
  const double L = std::log(1.0 / tol) + s;
  const double zeta = o.zeta ? *o.zeta : 2.0 * pi * d / L;
  const double lambda = std::acosh(std::max(1.0, L / (o.T * b * std::sin(w)))) + 0.3;
  TrapezoidGrid g;
  g.zeta = zeta;
  g.n_neg = 0;
  g.n_pos = o.n_half ? *o.n_half : half_count(lambda, zeta);
  return BromwichContour::make(sigma, b, w, d, g);
}

std::string DeformationReport::summary() const {
  std::ostringstream os;
  os << (ok ? "deformation ok" : "deformation violates the log cut") << ", min cut distance " << min_cut_distance;
  if (!offending.empty()) {
    os << ", " << offending.size() << " offending pairs, first q=" << offending.front().first
       << " node=" << offending.front().second;
  }
  return os.str();
}

DeformationReport validate_deformation(const LevyModel& model, const SinhContour& contour,
                                       const std::vector<cplx>& q_set, double floor) {
  if (q_set.empty()) fail(ErrorKind::domain, "validate_deformation: empty q set");
  DeformationReport r;
  r.min_cut_distance = std::numeric_limits<double>::infinity();
  std::vector<cplx> psi(contour.nodes.size());
  for (std::size_t k = 0; k < psi.size(); ++k) psi[k] = model.psi(contour.nodes[k]);
  for (const cplx& q : q_set) {
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const cplx z = 1.0 + psi[k] / q;
      // distance of z to (-inf, 0], relative to |z|
      const double dist = z.real() > 0.0 ? std::abs(z) : std::abs(z.imag());
      const double rel = dist / std::max(1.0, std::abs(z));
      r.min_cut_distance = std::min(r.min_cut_distance, rel);
      if (rel < floor) {
        r.ok = false;
        if (r.offending.size() < 64) r.offending.emplace_back(q, contour.nodes[k]);
      }
    }
  }
  return r;
}

}  // namespace levymax
