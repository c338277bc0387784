#include "levymax/pricers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "levymax/error.hpp"
#include "pricers_internal.hpp"

namespace levymax {

namespace detail {

double curve_im_at(const SinhContour& c, double re) {
  const double y = std::asinh(re / (c.b * std::cos(c.omega)));
  return c.omega1 + c.b * std::cosh(y) * std::sin(c.omega);
}

bool strictly_below(const SinhContour& lower, const SinhContour& upper) {
  // far out in the wings the gap drops below rounding of |z|
  for (const cplx& z : lower.nodes)
    if (!(z.imag() < curve_im_at(upper, z.real()) + 1e-12 * std::abs(z))) return false;
  return true;
}

std::vector<cplx> psi_on(const LevyModel& m, const SinhContour& c) {
  std::vector<cplx> out(c.nodes.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = m.psi(c.nodes[k]);
  return out;
}

cplx one_dim_integral(const Pipeline& pl, cplx q, double x, const std::function<cplx(cplx)>& coef) {
  const SinhContour* c;
  const std::vector<cplx>* psi;
  if (x > 0.0) {
    c = &pl.plus;
    psi = &pl.psi_plus();
  } else if (x < 0.0) {
    c = &pl.down;
    psi = &pl.psi_down;
  } else {
    c = &pl.mid;
    psi = &pl.psi_mid;
  }
  cplx acc = 0.0;
  for (std::size_t j = 0; j < c->nodes.size(); ++j) {
    const cplx xi = c->nodes[j];
    acc += std::exp(cplx(0.0, x) * xi) * coef(xi) / (q + (*psi)[j]) * c->ders[j];
  }
  return c->grid.zeta / (2.0 * std::numbers::pi) * acc;
}

}  // namespace detail

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const cplx I(0.0, 1.0);

}  // namespace

Pipeline Pipeline::build(const LevyModel& model, const PipelineOptions& o) {
  Pipeline pl;
  pl.model = model;
  pl.opts = o;
  RegularityProfile prof = model.profile;
  if (prof.finite_variation_with_drift()) {
    if (!o.q_hint) fail(ErrorKind::unsupported, "finite variation with drift: contours depend on q, pass q_hint");
    const double q = *o.q_hint;
    if (!(q > 0.0)) fail(ErrorKind::domain, "finite variation with drift: q must be real and positive");
    // keep the zero of q - i mu eta off the region between the contours
    if (model.mu > 0.0) prof.mu_minus = std::max(prof.mu_minus, -q / model.mu);
    if (model.mu < 0.0) prof.mu_plus = std::min(prof.mu_plus, q / -model.mu);
  }

  ContourOptions co;
  co.rule = o.rule;
  co.zeta = o.zeta;
  co.n_half = o.n_xi;
  co.omega = o.omega_plus;
  pl.plus = select_params(prof, ContourRole::xi_plus, o.tol, co);
  co.omega = o.omega_minus;
  co.band_lo = o.minus_band_lo;
  co.band_hi = o.minus_band_hi;
  pl.minus = select_params(prof, ContourRole::eta_minus, o.tol, co);

  ContourOptions cm;
  cm.rule = o.rule;
  cm.omega = o.omega_plus;
  cm.one_dim_sign = 0;
  pl.mid = select_params(prof, ContourRole::one_dim, o.tol, cm);

  const double wp = std::abs(pl.plus.omega), wm = std::abs(pl.minus.omega);
  const double plo = co.band_lo_frac * prof.mu_plus, phi = co.band_hi_frac * prof.mu_plus;
  const double mlo = co.band_hi_frac * prof.mu_minus, mhi = co.band_lo_frac * prof.mu_minus;
  pl.down = SinhContour::from_band(plo, phi, -wm, 0.9 * wm, pl.minus.grid);
  pl.up = SinhContour::from_band(mlo, mhi, wp, 0.9 * wp, pl.plus.grid);

  if (!detail::strictly_below(pl.minus, pl.down) || !detail::strictly_below(pl.up, pl.plus))
    fail(ErrorKind::numerical, "auxiliary one-dimensional contours intersect the WH contours");

  pl.engine = std::make_shared<const WhfEngine>(model, pl.plus, pl.minus);
  pl.psi_mid = detail::psi_on(model, pl.mid);
  pl.psi_down = detail::psi_on(model, pl.down);
  pl.psi_up = detail::psi_on(model, pl.up);

  // -psi(i y) over every apex band in use
  double worst = 0.0;
  auto scan = [&](double lo, double hi) {
    for (int k = 0; k <= 64; ++k) {
      const double y = lo + (hi - lo) * k / 64.0;
      worst = std::max(worst, -model.psi(cplx(0.0, y)).real());
    }
  };
  scan(plo, phi);
  scan(mlo, mhi);
  scan(o.minus_band_lo.value_or(mlo), o.minus_band_hi.value_or(mhi));
  pl.sigma_floor = 1.1 * worst;
  return pl;
}

CpdfBatch::CpdfBatch(const Pipeline& pl, std::vector<CpdfPoint> points, bool no_touch)
    : pl_(&pl), points_(std::move(points)) {
  const SinhContour& P = pl.plus;
  const SinhContour& M = pl.minus;
  const int np = P.size(), nm = M.size();
  std::map<double, int> groups;
  std::vector<double> group_x;
  prep_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const CpdfPoint& p = points_[i];
    Prepared& r = prep_[i];
    if (p.x1 > p.x2) fail(ErrorKind::domain, "cpdf: state requires x1 <= x2");
    if (p.x2 > p.a2) {
      r.route = Route::zero;
      continue;
    }
    const bool nt = no_touch || p.a1 >= p.a2;
    if (nt && p.x1 == p.a2) {
      r.route = Route::atom;
      continue;
    }
    const double xu = p.x1 - p.a2;
    auto it = groups.find(xu);
    if (it == groups.end()) {
      it = groups.emplace(xu, static_cast<int>(group_x.size())).first;
      group_x.push_back(xu);
    }
    r.group = it->second;
    if (nt) {
      r.route = Route::no_touch;
      continue;
    }
    r.route = Route::cpdf;
    const double x = p.x1 - p.a1;
    r.sign = x > 0.0 ? 1 : (x < 0.0 ? -1 : 0);
    if (r.sign != 0) {
      const SinhContour& C = r.sign > 0 ? P : M;
      Eigen::VectorXcd e(C.size());
      for (int j = 0; j < C.size(); ++j) e(j) = std::exp(I * x * C.nodes[j]) * C.ders[j] / (-I * C.nodes[j]);
      r.e1 = static_cast<int>(e1_.size());
      e1_.push_back(std::move(e));
    }
    Eigen::VectorXcd v(np);
    for (int j = 0; j < np; ++j) v(j) = std::exp(I * (p.a2 - p.a1) * P.nodes[j]) * P.ders[j] / P.nodes[j];
    r.ev = static_cast<int>(ev_.size());
    ev_.push_back(std::move(v));
  }
  eu_.resize(nm, static_cast<int>(group_x.size()));
  for (std::size_t g = 0; g < group_x.size(); ++g)
    for (int k = 0; k < nm; ++k) eu_(k, g) = std::exp(I * group_x[g] * M.nodes[k]) * M.ders[k];
  mid_w_.resize(pl.mid.size());
  for (int m = 0; m < pl.mid.size(); ++m) mid_w_(m) = pl.mid.ders[m] / (-I * pl.mid.nodes[m]);
}

std::vector<cplx> CpdfBatch::evaluate(const WhfTable& t) const {
  const Pipeline& pl = *pl_;
  const SinhContour& P = pl.plus;
  const SinhContour& M = pl.minus;
  const int np = P.size(), nm = M.size();
  const cplx q = t.q;
  const double zp = P.grid.zeta, zm = M.grid.zeta;

  Eigen::VectorXcd pm(nm), mp(np), inv_eta(nm);
  for (int k = 0; k < nm; ++k) {
    pm(k) = t.plus_on_minus[k];
    inv_eta(k) = 1.0 / (-I * M.nodes[k]);
  }
  for (int j = 0; j < np; ++j) mp(j) = t.minus_on_plus[j];

  bool need_p = false, need_m = false, need_mid = false, need_w = false;
  for (const Prepared& r : prep_) {
    if (r.route == Route::cpdf) {
      need_w = true;
      need_p |= r.sign > 0;
      need_m |= r.sign < 0;
      need_mid |= r.sign == 0;
    }
  }
  Eigen::MatrixXcd U, W;
  if (eu_.cols() > 0) {
    U = eu_.array().colwise() * pm.array();
    if (need_w) W = pl.engine->kernel() * U;
  }
  Eigen::VectorXcd rp, rm;
  if (need_p) {
    rp.resize(np);
    for (int j = 0; j < np; ++j) rp(j) = 1.0 / (q + pl.psi_plus()[j]);
  }
  if (need_m) {
    rm.resize(nm);
    for (int k = 0; k < nm; ++k) rm(k) = 1.0 / (q + pl.psi_minus()[k]);
  }
  cplx mid_val = 0.0;
  if (need_mid) {
    cplx acc = 0.0;
    for (int m = 0; m < pl.mid.size(); ++m) acc += mid_w_(m) / (q + pl.psi_mid[m]);
    mid_val = pl.mid.grid.zeta / two_pi * acc;
  }

  const double c2 = zp * zm / (two_pi * two_pi);
  std::vector<cplx> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Prepared& r = prep_[i];
    switch (r.route) {
      case Route::zero:
        out[i] = 0.0;
        break;
      case Route::atom:
        out[i] = t.a_plus / q;
        break;
      case Route::no_touch: {
        const cplx s = (U.col(r.group).array() * inv_eta.array()).sum();
        out[i] = (1.0 + zm / two_pi * s) / q;
        break;
      }
      case Route::cpdf: {
        const cplx i2 = c2 * (ev_[r.ev].array() * mp.array() * W.col(r.group).array()).sum();
        cplx i1;
        if (r.sign > 0) {
          i1 = zp / two_pi * (e1_[r.e1].array() * rp.array()).sum();
        } else if (r.sign < 0) {
          i1 = 1.0 / q + zm / two_pi * (e1_[r.e1].array() * rm.array()).sum();
        } else {
          i1 = mid_val;
        }
        out[i] = i1 + i2 / q;
        break;
      }
    }
  }
  return out;
}

LaplaceValue cpdf_laplace(const Pipeline& pl, const WhfTable& t, double x1, double x2, double a1, double a2) {
  CpdfBatch b(pl, {{x1, x2, a1, a2}});
  return {t.q, b.evaluate(t)[0]};
}

LaplaceValue no_touch_laplace(const Pipeline& pl, const WhfTable& t, double x1, double x2, double a2) {
  CpdfBatch b(pl, {{x1, x2, a2, a2}}, true);
  return {t.q, b.evaluate(t)[0]};
}

LaplaceValue barrier_laplace(const Pipeline& pl, const WhfTable& t, double x, double h, const BarrierPayoff& g) {
  if (!(x < h)) fail(ErrorKind::domain, "barrier: state must lie below the barrier");
  const cplx q = t.q;
  switch (g.kind) {
    case BarrierPayoffKind::constant: {
      LaplaceValue v = no_touch_laplace(pl, t, x, x, h);
      v.value *= g.scale;
      return v;
    }
    case BarrierPayoffKind::digital_put: {
      LaplaceValue v = cpdf_laplace(pl, t, x, x, std::min(g.k, h), h);
      v.value *= g.scale;
      return v;
    }
    case BarrierPayoffKind::exp_put:
      break;
  }
  // G(y) = e^y 1{y <= k}; only y < h matters
  const double k = std::min(g.k, h);
  const double ek = std::exp(k);
  const cplx euro = detail::one_dim_integral(pl, q, x - k, [ek](cplx xi) { return ek / (1.0 - I * xi); });

  const SinhContour& P = pl.plus;
  const SinhContour& M = pl.minus;
  Eigen::VectorXcd u(M.size()), w(P.size());
  for (int n = 0; n < M.size(); ++n) u(n) = std::exp(I * (x - h) * M.nodes[n]) * t.plus_on_minus[n] * M.ders[n];
  for (int j = 0; j < P.size(); ++j)
    w(j) = std::exp(I * (h - k) * P.nodes[j]) * ek * t.minus_on_plus[j] * P.ders[j] / (1.0 - I * P.nodes[j]);
  const Eigen::VectorXcd Du = pl.engine->kernel() * u;
  const cplx corr = I * P.grid.zeta * M.grid.zeta / (two_pi * two_pi) * (w.array() * Du.array()).sum();
  LaplaceValue v;
  v.q = q;
  v.parts[0] = g.scale * euro;
  v.parts[2] = -g.scale * corr / q;
  v.value = v.parts[0] + v.parts[2];
  return v;
}

const char* method_name(Method m) { return m == Method::sinh ? "sinh" : "gwr"; }

}  // namespace levymax
