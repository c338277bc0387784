#include "levymax/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "levymax/error.hpp"
#include "levymax/parallel.hpp"

namespace levymax {

namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
const cplx I(0.0, 1.0);

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

double bm_joint_cdf(double sigma, double mu, double T, double a1, double a2) {
  if (!(sigma > 0.0) || !(T > 0.0)) fail(ErrorKind::domain, "bm_joint_cdf: sigma and T must be positive");
  if (a2 < 0.0) return 0.0;
  const double a = std::min(a1, a2);
  const double s = sigma * std::sqrt(T);
  const double refl = std::exp(2.0 * mu * a2 / (sigma * sigma)) * norm_cdf((a - 2.0 * a2 - mu * T) / s);
  return std::clamp(norm_cdf((a - mu * T) / s) - refl, 0.0, 1.0);
}

double bm_no_touch(double sigma, double mu, double T, double a2) { return bm_joint_cdf(sigma, mu, T, a2, a2); }

OracleReport bm_exchange(double sigma, double mu, double T, double x1, double x2, double beta, double tol) {
  if (!(sigma > 0.0) || !(T > 0.0)) fail(ErrorKind::domain, "bm_exchange: sigma and T must be positive");
  if (x1 > x2) fail(ErrorKind::domain, "bm_exchange: x1 <= x2 required");
  const double s2 = sigma * sigma;
  const double norm = 2.0 / (sigma * s2 * std::sqrt(2.0 * pi) * T * std::sqrt(T));
  auto density = [&](double w, double m) {
    const double z = 2.0 * m - w;
    return norm * z * std::exp(-z * z / (2.0 * s2 * T) + mu * w / s2 - mu * mu * T / (2.0 * s2));
  };
  double err_total = 0.0;
  auto inner = [&](double m) {
    const double top = std::max(x2, x1 + m);
    const double lo = top / beta - x1;
    if (!(lo < m)) return 0.0;
    double e = 0.0;
    const double v = gauss_kronrod<double, 61>::integrate(
        [&](double w) { return (std::exp(beta * (x1 + w)) - std::exp(top)) * density(w, m); }, lo, m, 15, tol, &e);
    return v;
  };
  const double kink = std::max(0.0, x2 - x1);
  const double hi = kink + beta * s2 * T + std::abs(mu) * T + 40.0 * sigma * std::sqrt(T);
  double e1 = 0.0, e2 = 0.0;
  double v = 0.0;
  if (kink > 0.0) v += gauss_kronrod<double, 61>::integrate(inner, 0.0, kink, 15, tol, &e1);
  v += gauss_kronrod<double, 61>::integrate(inner, kink, hi, 15, tol, &e2);
  err_total = e1 + e2;
  return {"bm-exchange-2d", v, std::max(err_total, 1e-14 * std::max(1.0, std::abs(v))), 0.0};
}

OracleReport flat_contour_cpdf_laplace(const LevyModel& model, double q, double x1, double x2, double a1, double a2,
                                       const FlatOptions& o) {
  if (!(q > 0.0)) fail(ErrorKind::domain, "flat oracle: q must be real and positive");
  if (x1 > x2) fail(ErrorKind::domain, "flat oracle: x1 <= x2 required");
  if (x2 > a2) return {"flat-contour", 0.0, 1e-16, 0.0};
  if (x1 == a1) fail(ErrorKind::unsupported, "flat oracle: x1 = a1 gives a non-oscillating integral");
  if (!(x1 < a2) || !(a1 < a2)) fail(ErrorKind::unsupported, "flat oracle: requires x1 < a2 and a1 < a2");
  if (!(o.h > 0.0) || !(o.L > o.h) || o.n_parts < 2) fail(ErrorKind::domain, "flat oracle: bad grid options");

  const int half = static_cast<int>(std::lround(o.L / o.h));
  // the eta line runs past the xi line so the inner sums for xi near the ends
  // are not cut at their kernel peak
  const double xu = x1 - a2, xv = a2 - a1;
  const int half_eta = half + static_cast<int>(std::ceil(40.0 / (std::abs(xu) * o.h)));
  const int n = o.n_parts;
  const long nodes = 2L * half + 1, nodes_eta = 2L * half_eta + 1;
  if (nodes_eta > o.max_nodes) fail(ErrorKind::domain, "flat oracle: node count exceeds the memory guard");
  const int total = static_cast<int>(nodes) + n, total_eta = static_cast<int>(nodes_eta) + n;

  // outer lines; the factor integral runs on one line below both
  const double wp = 0.5 * model.profile.mu_plus, wm = 0.25 * model.profile.mu_minus;
  const double w_int = 0.625 * model.profile.mu_minus;

  TrapezoidGrid grid, grid_eta;
  grid.zeta = grid_eta.zeta = o.h;
  grid.n_neg = grid.n_pos = half;
  grid_eta.n_neg = grid_eta.n_pos = half_eta;
  std::vector<cplx> xi(total), eta(total_eta);
  for (int k = 0; k < total; ++k) xi[k] = cplx(grid.node(k - half), wp);
  for (int k = 0; k < total_eta; ++k) eta[k] = cplx(grid_eta.node(k - half_eta), wm);

  // phi+ at every target from one fixed graded grid s = c sinh(t) + i w_int.
  // A fixed rule keeps the quadrature error smooth in the target, which the
  // differencing below relies on.
  const double x_max = grid_eta.node(half_eta + n);
  const double gap = std::min(wm - w_int, w_int - model.profile.mu_minus);
  const double ht = 2.0 * pi * gap / 30.0 / std::sqrt(1.0 + x_max * x_max);
  const double t_max = std::asinh(1.0 / o.rel_tol);
  const long nt = static_cast<long>(std::ceil(t_max / ht));
  if (2 * nt + 1 > o.max_nodes) fail(ErrorKind::domain, "flat oracle: factor grid exceeds the memory guard");
  std::vector<cplx> s_nodes(2 * nt + 1), F(2 * nt + 1);
  for (long j = -nt; j <= nt; ++j) {
    const double t = j * ht;
    const cplx s(std::sinh(t), w_int);
    const cplx z = 1.0 + model.psi(s) / q;
    if (z.real() <= 0.0 && std::abs(z.imag()) < 1e-12) fail(ErrorKind::numerical, "flat oracle: log cut on the line");
    s_nodes[j + nt] = s;
    F[j + nt] = std::log(z) / s * (ht * std::cosh(t));
  }
  auto phi_plus_at = [&](cplx x) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < s_nodes.size(); ++j) acc += F[j] / (x - s_nodes[j]);
    return std::exp(-I / (2.0 * pi) * x * acc);
  };
  std::vector<cplx> phim_plus(total), phip_minus(total_eta);
  parallel_for(total_eta, [&](std::size_t k) { phip_minus[k] = phi_plus_at(eta[k]); });
  parallel_for(total, [&](std::size_t k) { phim_plus[k] = q / ((q + model.psi(xi[k])) * phi_plus_at(xi[k])); });

  auto evaluate = [&](int parts) {
    cplx i1;
    const double x = x1 - a1;
    std::vector<cplx> g(total);
    if (x > 0.0) {
      for (int k = 0; k < total; ++k) g[k] = std::exp(-x * wp) / ((q + model.psi(xi[k])) * (-I * xi[k]));
      i1 = sum_by_parts(grid, -x, g, parts) / (2.0 * pi);
    } else {
      g.resize(total_eta);
      for (int k = 0; k < total_eta; ++k) g[k] = std::exp(-x * wm) / ((q + model.psi(eta[k])) * (-I * eta[k]));
      i1 = 1.0 / q + sum_by_parts(grid_eta, -x, g, parts) / (2.0 * pi);
    }
    std::vector<cplx> outer(total);
    parallel_for(total, [&](std::size_t j) {
      std::vector<cplx> inner(total_eta);
      for (int k = 0; k < total_eta; ++k) inner[k] = std::exp(-xu * wm) * phip_minus[k] / (xi[j] - eta[k]);
      const cplx W = sum_by_parts(grid_eta, -xu, inner, parts);
      outer[j] = std::exp(-xv * wp) * phim_plus[j] * W / xi[j];
    });
    const cplx i2 = sum_by_parts(grid, -xv, outer, parts) / (4.0 * pi * pi);
    return (i1 + i2 / q).real();
  };
  const double v = evaluate(n);
  const double v_lo = evaluate(n - 1);
  return {"flat-contour", v, std::abs(v - v_lo) + 1e-9, static_cast<double>(nodes + nodes_eta + 2 * nt + 1)};
}

namespace {

struct JumpSide {
  double c = 0.0, nu = 0.0, kappa = 0.0;  // density c x^{-1-nu} e^{-kappa x}, x > 0
  double rate = 0.0, mean = 0.0, small_var = 0.0;
};

JumpSide make_side(double c, double nu, double kappa, double eps) {
  JumpSide s{c, nu, kappa};
  if (c == 0.0) return s;
  auto big = [&](double p) {
    // int_eps^inf x^p c x^{-1-nu} e^{-kappa x} dx, x = eps e^t
    return gauss_kronrod<double, 61>::integrate(
        [&](double t) {
          return c * std::exp((p - nu) * (std::log(eps) + t) - kappa * eps * std::exp(t));
        },
        0.0, inf, 15, 1e-12);
  };
  s.rate = big(0.0);
  s.mean = big(1.0);
  s.small_var = gauss_kronrod<double, 61>::integrate(
      [&](double t) {
        const double x = eps * std::exp(-t);
        return c * std::pow(x, 2.0 - nu) * std::exp(-kappa * x);
      },
      0.0, inf, 15, 1e-12);
  return s;
}

double draw_jump(const JumpSide& s, double eps, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (;;) {
    const double x = eps * std::pow(1.0 - U(rng), -1.0 / s.nu);
    if (U(rng) < std::exp(-s.kappa * (x - eps))) return x;
  }
}

}  // namespace

OracleReport mc_joint_cdf(const LevyModel& model, double T, double a1, double a2, const McOptions& o) {
  if (!(T > 0.0) || o.n_paths < 1 || o.n_steps < 1) fail(ErrorKind::user, "mc: T, paths and steps must be positive");
  if (!(o.jump_cutoff > 0.0)) fail(ErrorKind::user, "mc: jump cutoff must be positive");
  if (a2 < 0.0) return {"monte-carlo", 0.0, 1.0 / static_cast<double>(o.n_paths), static_cast<double>(o.n_paths)};

  const double eps = o.jump_cutoff;
  JumpSide up, dn;
  double var = 0.0;
  if (model.kind == ModelKind::brownian) {
    var = model.sigma2;
  } else {
    up = make_side(model.c_plus, model.nu_plus, -model.lambda_minus, eps);
    dn = make_side(model.c_minus, model.nu_minus, model.lambda_plus, eps);
    var = up.small_var + dn.small_var;
  }
  const double drift = model.mean() - (up.mean - dn.mean);
  const double rate = up.rate + dn.rate;
  const double dt = T / o.n_steps;
  const double sd = std::sqrt(var * dt);

  const int chunks = 64;
  std::vector<long> hits(chunks, 0);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> N01(0.0, 1.0);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        std::poisson_distribution<int> P(rate > 0.0 ? rate * dt : 1.0);
        const long n = o.n_paths / chunks + (static_cast<long>(c) < o.n_paths % chunks ? 1 : 0);
        long h = 0;
        for (long p = 0; p < n; ++p) {
          double x = 0.0, m = 0.0;
          for (int k = 0; k < o.n_steps; ++k) {
            const double g = drift * dt + sd * N01(rng);
            const double end = x + g;
            double top = std::max(x, end);
            if (sd > 0.0) top = 0.5 * (x + end + std::sqrt(g * g - 2.0 * sd * sd * std::log(1.0 - U(rng))));
            m = std::max(m, top);
            x = end;
            if (rate > 0.0) {
              for (int j = P(rng); j > 0; --j) {
                if (U(rng) * rate < up.rate)
                  x += draw_jump(up, eps, rng);
                else
                  x -= draw_jump(dn, eps, rng);
                m = std::max(m, x);
              }
            }
          }
          if (x <= a1 && m <= a2) ++h;
        }
        hits[c] = h;
      },
      o.threads);
  long total = 0;
  for (long h : hits) total += h;
  const double nn = static_cast<double>(o.n_paths);
  const double p = total / nn;
  const double se = std::sqrt(std::max(p * (1.0 - p), 1.0 / nn) / nn);
  return {"monte-carlo", p, se, nn};
}

}  // namespace levymax
