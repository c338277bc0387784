// One line per criterion: PASS/FAIL, measured figure, tolerance.
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "levymax/contours.hpp"
#include "levymax/error.hpp"
#include "levymax/golden.hpp"
#include "levymax/laplace.hpp"
#include "levymax/oracle.hpp"
#include "levymax/pricers.hpp"
#include "levymax/quad.hpp"
#include "levymax/whf.hpp"

using namespace levymax;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

PricingTask golden_task(const GoldenTable& g, const std::vector<GoldenCell>& cells, double tol) {
  PricingTask t;
  t.model = g.model();
  t.tol = tol;
  for (const auto& c : cells) {
    PricingPoint p;
    p.T = c.T, p.a1 = c.a1, p.a2 = c.a2;
    t.points.push_back(p);
  }
  return t;
}

PricingPoint point(double T, double x1, double x2, double a1, double a2, double beta = 2.0) {
  PricingPoint p;
  p.T = T, p.x1 = x1, p.x2 = x2, p.a1 = a1, p.a2 = a2, p.beta = beta;
  return p;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

void criterion1() {
  const auto& g = golden_table(1);
  auto cells = g.active();
  auto task = golden_task(g, cells, 1e-11);
  std::vector<double> per_point;
  PricingResult r;
  for (int i = 0; i < 3; ++i) {
    double t0 = now_ms();
    r = price(task, LaplaceScheme{});
    per_point.push_back((now_ms() - t0) / cells.size());
  }
  double worst = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) worst = std::max(worst, std::abs(r.rows[i].value - cells[i].value));
  double ms = median(per_point);
  report(1, worst <= 1e-10 && ms <= 100.0,
         fmt("Table 1, 25 cells: max |err| %.2e (tol 1e-10), %.1f ms/point (limit 100)", worst, ms));
}

void criterion2() {
  const auto& g = golden_table(3);
  auto cells = g.active();
  auto r = price(golden_task(g, cells, 1e-11), LaplaceScheme{});
  double worst = 0, worst15 = 0;
  bool ok = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    double e = std::abs(r.rows[i].value - cells[i].value);
    ok = ok && e <= cells[i].tol;
    double& w = cells[i].T == 15.0 ? worst15 : worst;
    w = std::max(w, e);
  }
  report(2, ok,
         fmt("Table 3, %zu cells (15 duplicated T=5 cells excluded): max |err| %.2e (tol 1e-9), T=15 %.2e (tol 1e-8)",
             cells.size(), worst, worst15));
}

void criterion3() {
  std::vector<double> errs;
  std::string worst;
  double mx = 0;
  int over = 0;
  for (int id : {1, 3}) {
    const auto& g = golden_table(id);
    auto cells = g.active();
    LaplaceScheme s;
    s.method = Method::gwr;
    s.gwr_m = 8;
    auto r = price(golden_task(g, cells, 1e-11), s);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double e = std::abs(r.rows[i].value - cells[i].value);
      errs.push_back(e);
      over += e > 5e-5;
      if (e > mx) mx = e, worst = cells[i].provenance;
    }
  }
  double md = median(errs);
  report(3, mx <= 5e-5 && md <= 1e-6,
         fmt("GWR M=8 on %zu Table 1+3 points: max |err| %.2e (tol 5e-5) at %s, %d cells over, median %.2e (tol 1e-6)",
             errs.size(), mx, worst.c_str(), over, md));
}

void criterion4() {
  double worst = 0;
  for (double nu : {0.2, 1.2}) {
    auto m = make_kobol_m2(0.1, nu, 1.0, -2.0);
    const auto& p = m.profile;
    // contours bracket the sample strip Im xi in [mu-/2, mu+/2]
    ContourOptions op, om;
    op.band_lo = 0.6 * p.mu_plus, op.band_hi = 0.95 * p.mu_plus;
    om.band_lo = 0.95 * p.mu_minus, om.band_hi = 0.6 * p.mu_minus;
    auto Lp = select_params(p, ContourRole::xi_plus, 1e-13, op);
    auto Lm = select_params(p, ContourRole::eta_minus, 1e-13, om);
    std::mt19937_64 gen(20240601);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> pts;
    for (int i = 0; i < 100; ++i)
      pts.emplace_back((2 * u(gen) - 1) * (i % 2 ? 30.0 : 3.0), 0.5 * p.mu_minus + 0.5 * (p.mu_plus - p.mu_minus) * u(gen));
    std::vector<cplx> qs;
    for (int k = 0; k < 10; ++k) qs.emplace_back(0.25 * std::pow(1.8, k));
    for (int k = 0; k < 10; ++k) qs.push_back(0.3 + std::polar(0.2 * std::pow(1.8, k), (k % 2 ? 1 : -1) * (0.2 + 0.12 * k)));
    for (auto q : qs) {
      auto pp = phi_plus(m, q, pts, Lm);
      auto pm = phi_minus(m, q, pts, Lp);
      for (std::size_t i = 0; i < pts.size(); ++i)
        worst = std::max(worst, std::abs(pp[i] * pm[i] * (q + m.psi(pts[i])) / q - 1.0));
    }
  }
  report(4, worst <= 1e-12, fmt("WH identity, 100 strip points x 20 q x 2 models: max residual %.2e (tol 1e-12)", worst));
}

void criterion5() {
  const double sigma = 0.3;
  struct Case {
    PayoffKind kind;
    double mu;
    PricingPoint p;
  };
  std::vector<Case> cases = {
      {PayoffKind::cpdf, 0.0, point(0.5, 0, 0, -0.1, 0.2)},
      {PayoffKind::cpdf, 0.1, point(0.5, 0, 0, 0.1, 0.2)},
      {PayoffKind::cpdf, -0.2, point(1.0, -0.05, 0.02, 0.1, 0.2)},
      {PayoffKind::cpdf, 0.05, point(2.0, 0, 0, 0.0, 0.05)},
      {PayoffKind::no_touch, 0.0, point(0.5, 0, 0, 0, 0.2)},
      {PayoffKind::no_touch, -0.2, point(1.0, 0, 0, 0, 0.1)},
      {PayoffKind::no_touch, 0.1, point(0.25, -0.03, 0.0, 0, 0.05)},
      {PayoffKind::exchange, 0.0, point(0.5, 0, 0, 0, 0, 2.0)},
      {PayoffKind::exchange, 0.1, point(0.5, -0.1, 0.05, 0, 0, 2.5)},
      {PayoffKind::exchange, -0.2, point(1.0, 0, 0.02, 0, 0, 2.0)},
  };
  double worst_abs = 0, worst_rel = 0;
  bool ok = true;
  for (const auto& c : cases) {
    PricingTask t;
    t.model = make_brownian(sigma, c.mu);
    t.kind = c.kind;
    t.tol = c.kind == PayoffKind::exchange ? 1e-8 : 1e-10;
    t.points = {c.p};
    double v = price(t, LaplaceScheme{}).rows[0].value;
    const auto& p = c.p;
    if (c.kind == PayoffKind::exchange) {
      double ex = bm_exchange(sigma, c.mu, p.T, p.x1, p.x2, p.beta).value;
      worst_rel = std::max(worst_rel, std::abs(v / ex - 1.0));
      ok = ok && std::abs(v / ex - 1.0) <= 1e-6;
    } else {
      double ex = c.kind == PayoffKind::cpdf ? bm_joint_cdf(sigma, c.mu, p.T, p.a1 - p.x1, p.a2 - p.x1)
                                             : bm_no_touch(sigma, c.mu, p.T, p.a2 - p.x1);
      worst_abs = std::max(worst_abs, std::abs(v - ex));
      ok = ok && std::abs(v - ex) <= 1e-8;
    }
  }
  report(5, ok,
         fmt("Brownian suite, 10 points: cpdf/no-touch max |err| %.2e (tol 1e-8), exchange max rel err %.2e (tol 1e-6)",
             worst_abs, worst_rel));
}

void criterion6() {
  auto m = golden_table(1).model();
  PipelineOptions po;
  po.tol = 1e-12;
  auto pl = Pipeline::build(m, po);
  const double q = 4.0;
  auto t = pl.table(q);
  double worst = 0;
  for (auto [a1, a2] : {std::pair{-0.075, 0.175}, {-0.05, 0.1}, {0.025, 0.175}}) {
    double v = cpdf_laplace(pl, t, 0, 0, a1, a2).value.real();
    double f = flat_contour_cpdf_laplace(m, q, 0, 0, a1, a2).value;
    worst = std::max(worst, std::abs(f - v));
  }
  report(6, worst <= 1e-5, fmt("flat long-grid transform vs sinh pipeline at 3 Table 1 points, q=4: max |diff| %.2e (tol 1e-5)", worst));
}

void criterion7() {
  const auto& g = golden_table(1);
  auto cells = g.active();
  auto task = golden_task(g, cells, 1e-13);
  LaplaceScheme s1, s2;
  s1.rule = AngleRule::family_I;
  s2.rule = AngleRule::family_II;
  auto r1 = price(task, s1), r2 = price(task, s2);
  double worst = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) worst = std::max(worst, std::abs(r1.rows[i].value - r2.rows[i].value));
  report(7, worst <= 1e-13, fmt("deformations I vs II on 25 Table 1 points: max |diff| %.2e (tol 1e-13)", worst));
}

// P[X_T <= a] by a sinh-deformed inversion written out here, independent of the pricers
double marginal_cdf(const LevyModel& m, double T, double a) {
  const bool below = a < 0;  // a < 0: contour above 0, wings up; else complement, wings down
  const double om = below ? 0.35 : -0.35, apex = below ? 0.5 * m.profile.mu_plus : 0.5 * m.profile.mu_minus;
  const double b = 1.0, w1 = apex - b * std::sin(om);
  const double zeta = 0.01;
  cplx s = 0.0;
  for (int j = -1500; j <= 1500; ++j) {
    cplx y(j * zeta, 0.0);
    cplx xi = cplx(0, w1) + b * std::sinh(cplx(0, om) + y);
    cplx dxi = b * std::cosh(cplx(0, om) + y);
    s += std::exp(-cplx(0, 1) * a * xi - T * m.psi(xi)) / xi * dxi;
  }
  cplx v = zeta * s / (2 * std::numbers::pi);
  return below ? (cplx(0, 1) * v).real() : 1.0 - (-cplx(0, 1) * v).real();
}

void criterion8() {
  std::vector<std::string> bad;
  auto m = golden_table(3).model();
  const double T = 1.0;
  std::vector<double> a1s = {-0.3, -0.1, -0.05, 0.0, 0.05, 0.1, 0.3}, a2s = {0.01, 0.05, 0.1, 0.2, 0.4};
  PricingTask t;
  t.model = m;
  t.tol = 1e-11;
  for (double a2 : a2s)
    for (double a1 : a1s) t.points.push_back(point(T, 0, 0, a1, a2));
  for (double a1 : a1s) t.points.push_back(point(T, 0, 0, a1, 15.0));
  auto r = price(t, LaplaceScheme{});
  auto F = [&](std::size_t i2, std::size_t i1) { return r.rows[i2 * a1s.size() + i1].value; };
  std::vector<double> marg;
  for (double a1 : a1s) marg.push_back(marginal_cdf(m, T, a1));
  double range_gap = 0, mono_gap = 0, marg_excess = 0, far_gap = 0;
  for (std::size_t i2 = 0; i2 < a2s.size(); ++i2)
    for (std::size_t i1 = 0; i1 < a1s.size(); ++i1) {
      double v = F(i2, i1);
      range_gap = std::max({range_gap, -v, v - 1.0});
      if (i1 > 0) mono_gap = std::max(mono_gap, F(i2, i1 - 1) - v);
      if (i2 > 0) mono_gap = std::max(mono_gap, F(i2 - 1, i1) - v);
      marg_excess = std::max(marg_excess, v - marg[i1]);
    }
  for (std::size_t i1 = 0; i1 < a1s.size(); ++i1)
    far_gap = std::max(far_gap, std::abs(F(a2s.size(), i1) - marg[i1]));
  if (range_gap > 1e-12) bad.push_back(fmt("range %.1e", range_gap));
  if (mono_gap > 1e-12) bad.push_back(fmt("monotonicity %.1e", mono_gap));
  if (marg_excess > 1e-12) bad.push_back(fmt("marginal bound %.1e", marg_excess));
  if (far_gap > 1e-9) bad.push_back(fmt("a2 -> inf %.1e", far_gap));

  // no-touch against the cpdf on the diagonal
  PricingTask c, n;
  c.model = n.model = m;
  c.tol = n.tol = 1e-11;
  n.kind = PayoffKind::no_touch;
  for (double a : {0.025, 0.1, 0.175}) {
    c.points.push_back(point(T, 0, 0, a, a));
    n.points.push_back(point(T, 0, 0, 0, a));
  }
  auto rc = price(c, LaplaceScheme{}), rn = price(n, LaplaceScheme{});
  double diag_gap = 0;
  for (std::size_t i = 0; i < rc.rows.size(); ++i) diag_gap = std::max(diag_gap, std::abs(rc.rows[i].value - rn.rows[i].value));
  if (diag_gap > 1e-8) bad.push_back(fmt("no-touch vs cpdf %.1e", diag_gap));

  // exchange: nonnegative, shrinks to 0 with T
  PricingTask e;
  e.model = m;
  e.kind = PayoffKind::exchange;
  e.tol = 1e-8;
  for (double Te : {1.0, 0.1, 0.01, 0.001}) e.points.push_back(point(Te, 0, 0, 0, 0, 1.5));
  auto re = price(e, LaplaceScheme{});
  bool ex_ok = true;
  for (std::size_t i = 0; i < re.rows.size(); ++i) {
    ex_ok = ex_ok && re.rows[i].value >= -1e-10;
    if (i > 0) ex_ok = ex_ok && re.rows[i].value < re.rows[i - 1].value;
  }
  ex_ok = ex_ok && re.rows.back().value < 1e-2 * re.rows.front().value;
  if (!ex_ok) bad.push_back(fmt("exchange %.3e .. %.3e", re.rows.front().value, re.rows.back().value));

  std::string msg = fmt(
      "range/monotone gaps %.1e/%.1e, F - marginal <= %.1e, |F(a2=15) - marginal| %.1e (tol 1e-9), no-touch vs cpdf "
      "%.1e (tol 1e-8), exchange T=1..1e-3: %.3e -> %.3e",
      range_gap, mono_gap, marg_excess, far_gap, diag_gap, re.rows.front().value, re.rows.back().value);
  for (const auto& b : bad) msg += "; violated: " + b;
  report(8, bad.empty(), msg);
}

void criterion9() {
  std::vector<std::string> bad;
  // discretization: sech on a strip of half-width pi/2, halving zeta squares the error factor
  auto sech_err = [](double zeta) {
    TrapezoidGrid g;
    g.zeta = zeta;
    g.n_neg = g.n_pos = static_cast<int>(60 / zeta);
    return std::abs(trapezoid_sum(g, [](double y) { return cplx(1.0 / std::cosh(y)); }).real() - std::numbers::pi);
  };
  double e1 = sech_err(1.0), e2 = sech_err(0.5);
  // e(zeta) ~ e^{-pi^2/zeta}: halving zeta gains pi^2 in the log
  const double pi2 = std::numbers::pi * std::numbers::pi;
  double gain = std::log(e1 / e2) / pi2;
  bool disc_ok = e1 <= discretization_bound(1.0, 1.5, 10.0) && e2 <= discretization_bound(0.5, 1.5, 10.0) &&
                 std::abs(gain - 1.0) < 0.1;
  if (!disc_ok) bad.push_back("discretization law");

  // doubling N on a pricing run
  const auto& g = golden_table(1);
  std::vector<GoldenCell> cells = {g.cells[0], g.cells[8], g.cells[24]};
  auto task = golden_task(g, cells, 1e-11);
  auto base = price(task, LaplaceScheme{});
  LaplaceScheme dbl;
  dbl.n_xi = base.diag.n_plus;  // half-size override: about twice the selected half-size
  dbl.n_ell = 2 * base.diag.n_ell;
  auto twice = price(task, dbl);
  double dn = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) dn = std::max(dn, std::abs(twice.rows[i].value - base.rows[i].value));
  if (dn > task.tol) bad.push_back(fmt("doubling N moved %.1e", dn));

  // inversion backends on elementary transforms
  double br = 0, gw = 0, gw_long = 0;
  for (double T : {0.05, 0.25, 1.0, 5.0, 15.0}) {
    RegularityProfile p;
    ContourOptions o;
    o.T = T;
    o.rule = AngleRule::family_II;
    o.sigma_floor = 0.1;
    auto c = select_bromwich(p, 1e-13, o);
    br = std::max(br, std::abs(invert_sinh_bromwich(c, [](cplx q) { return 1.0 / q; }, T) - 1.0));
    br = std::max(br, std::abs(invert_sinh_bromwich(c, [](cplx q) { return 1.0 / (q + 1.0); }, T) - std::exp(-T)));
    GwrScheme s{8, 0.0, T};
    double& w = T <= 1.0 ? gw : gw_long;
    w = std::max(w, std::abs(invert_gwr(s, [](double q) { return 1.0 / q; }) - 1.0));
    w = std::max(w, std::abs(invert_gwr(s, [](double q) { return 1.0 / (q + 1.0); }) - std::exp(-T)));
  }
  if (br > 1e-12) bad.push_back(fmt("Bromwich %.1e", br));
  if (gw > 1e-7) bad.push_back(fmt("GWR %.1e", gw));

  std::string msg = fmt(
      "sech trapezoid err %.1e -> %.1e (log gain %.2f x pi^2), doubling N moves %.1e (budget 1e-11), Bromwich on 1/q, "
      "1/(q+1), T=0.05..15: %.1e (tol 1e-12), GWR T<=1: %.1e (tol 1e-7) [T=5,15: %.1e, not gated]",
      e1, e2, gain, dn, br, gw, gw_long);
  for (const auto& b : bad) msg += "; violated: " + b;
  report(9, bad.empty(), msg);
}

void guarded(int id, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, false, std::string("aborted: ") + e.what());
  }
}

}  // namespace

int main() {
  const std::function<void()> all[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                       criterion6, criterion7, criterion8, criterion9};
  for (int i = 0; i < 9; ++i) {
    double t0 = now_ms();
    guarded(i + 1, all[i]);
    std::fprintf(stderr, "  (criterion %d took %.1f s)\n", i + 1, (now_ms() - t0) / 1000);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
