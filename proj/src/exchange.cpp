#include <cmath>
#include <numbers>

#include "levymax/error.hpp"
#include "levymax/pricers.hpp"
#include "pricers_internal.hpp"

namespace levymax {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const cplx I(0.0, 1.0);

}  // namespace

PipelineOptions exchange_options(const LevyModel& model, double beta, PipelineOptions base) {
  if (!(beta > 1.0)) fail(ErrorKind::domain, "exchange: beta must exceed 1");
  const double mm = model.profile.mu_minus;
  if (!(mm < -beta))
    fail(ErrorKind::domain, "exchange: strip of analyticity must extend below -beta (lambda_minus < -beta)");
  const double gap = -beta - mm;
  base.minus_band_lo = -beta - 0.8 * gap;
  base.minus_band_hi = -beta - 0.2 * gap;
  return base;
}

LaplaceValue exchange_laplace(const Pipeline& pl, const WhfTable& t, double x1, double x2, double beta) {
  if (!(beta > 1.0)) fail(ErrorKind::domain, "exchange: beta must exceed 1");
  if (x1 > x2) fail(ErrorKind::domain, "exchange: state requires x1 <= x2");
  if (x2 < 0.0) fail(ErrorKind::unsupported, "exchange: only x2 >= 0 is supported");
  const SinhContour& P = pl.plus;
  const SinhContour& M = pl.minus;
  if (!(M.apex() < -beta)) fail(ErrorKind::domain, "exchange: L- must lie below -beta, build with exchange_options");

  const cplx q = t.q;
  const double zm = M.grid.zeta;
  const double r = 1.0 - 1.0 / beta;

  cplx i1 = 0.0;
  if (x2 > 0.0) {
    const double eb = std::exp(beta * x2), e1 = std::exp(x2);
    i1 += detail::one_dim_integral(pl, q, x1 - x2, [&](cplx xi) { return eb / (beta - I * xi); });
    i1 += detail::one_dim_integral(pl, q, x1 - x2 / beta,
                                   [&](cplx xi) { return beta * e1 / ((beta - I * xi) * (-I * xi)); });
    i1 += detail::one_dim_integral(pl, q, x1 - x2, [&](cplx xi) { return -e1 / (-I * xi); });
  }

  const Eigen::MatrixXcd& D = pl.engine->kernel();
  const int np = P.size(), nm = M.size();
  Eigen::VectorXcd E(nm), F(np);
  cplx i2 = 0.0;
  for (int k = 0; k < nm; ++k) {
    const cplx eta = M.nodes[k];
    const cplx pp = t.plus_on_minus[k] - t.a_plus;
    E(k) = std::exp(I * (x1 - x2) * eta) * pp * M.ders[k];
    i2 += E(k) / (I * eta * (1.0 - I * eta));
  }
  i2 *= t.a_minus * std::exp(x2) * zm / two_pi;
  for (int j = 0; j < np; ++j) F(j) = (t.minus_on_plus[j] - t.a_minus) * P.ders[j];

  Eigen::VectorXcd ea(nm), ec(nm);
  for (int k = 0; k < nm; ++k) {
    ea(k) = E(k) / (I * M.nodes[k] - beta);
    ec(k) = E(k) / (I * M.nodes[k] - 1.0);
  }
  const Eigen::VectorXcd za = D * ea, zc = D * ec;
  cplx s = 0.0;
  const double eb = std::exp(beta * x2), e1 = std::exp(x2);
  for (int j = 0; j < np; ++j) {
    const cplx xi = P.nodes[j];
    s += F(j) * eb * za(j);
    s += F(j) * (-e1 * (1.0 - I * xi) / (-I * xi)) * zc(j);
    const cplx cj = beta * std::exp((1.0 + I * xi * r) * x2) * (1.0 - I * xi / beta) / ((beta - I * xi) * (-I * xi));
    const cplx shift = 1.0 + I * xi * r;
    cplx inner = 0.0;
    for (int k = 0; k < nm; ++k) inner += D(j, k) * E(k) / (I * M.nodes[k] - shift);
    s += F(j) * cj * inner;
  }
  const cplx i3 = I * P.grid.zeta * zm / (two_pi * two_pi) * s;

  LaplaceValue v;
  v.q = q;
  v.parts[0] = i1;
  v.parts[1] = i2 / q;
  v.parts[2] = i3 / q;
  v.value = i1 + (i2 + i3) / q;
  return v;
}

GeneralHandles cpdf_handles(double x2, double a1, double a2) {
  GeneralHandles h;
  h.f1.push_back({[](cplx z) { return 1.0 / (-I * z); }, std::min(a1, x2)});
  if (x2 < a1) {
    h.w0.push_back({[](cplx z) { return 1.0 / (I * z); }, x2});
    h.w0.push_back({[](cplx z) { return -1.0 / (I * z); }, a1});
  }
  h.f2.push_back({[](cplx z1, cplx z2) { return 1.0 / (I * z2) / (-I * (z1 + z2)); }, a1, a1});
  h.f2.push_back({[](cplx z1, cplx z2) { return -1.0 / (I * z2) / (-I * z1); }, a1, a2});
  return h;
}

LaplaceValue laplace_value_general(const Pipeline& pl, const WhfTable& t, double x1, double x2,
                                   const GeneralHandles& h) {
  if (x1 > x2) fail(ErrorKind::domain, "general: state requires x1 <= x2");
  const SinhContour& P = pl.plus;
  const SinhContour& M = pl.minus;
  const int np = P.size(), nm = M.size();
  const cplx q = t.q;
  const double zp = P.grid.zeta, zm = M.grid.zeta;

  cplx t1 = 0.0;
  for (const Osc1& f : h.f1) t1 += detail::one_dim_integral(pl, q, x1 - f.shift, f.amp);

  // atom term
  cplx t2 = 0.0;
  if (std::abs(t.a_minus) > 0.0) {
    for (const Osc1& w : h.w0) {
      const double x = x1 - w.shift;
      cplx acc = 0.0;
      if (x < 0.0 || x == 0.0) {
        for (int k = 0; k < nm; ++k) {
          const cplx eta = M.nodes[k];
          acc += std::exp(I * x * eta) * (t.plus_on_minus[k] - t.a_plus) * w.amp(eta) * M.ders[k];
        }
        acc *= zm / two_pi;
      } else {
        const SinhContour& U = pl.up;
        const std::vector<cplx> pmu = phi_minus(pl.model, q, U.nodes, P);
        const std::vector<cplx> ppu = phi_from_identity(q, pmu, pl.psi_up);
        for (int k = 0; k < U.size(); ++k) {
          const cplx eta = U.nodes[k];
          acc += std::exp(I * x * eta) * (ppu[k] - t.a_plus) * w.amp(eta) * U.ders[k];
        }
        acc *= U.grid.zeta / two_pi;
      }
      t2 += acc;
    }
  }

  // w0^- on the nodes of L-
  Eigen::VectorXcd wm = Eigen::VectorXcd::Zero(nm);
  const Eigen::MatrixXcd& D = pl.engine->kernel();
  for (const Osc1& f : h.f1) {
    const double x = x2 - f.shift;
    if (x >= 0.0) {
      Eigen::VectorXcd g(np);
      for (int j = 0; j < np; ++j) {
        const cplx xi = P.nodes[j];
        g(j) = std::exp(I * x * xi) * (t.minus_on_plus[j] - t.a_minus) * f.amp(xi) * P.ders[j];
      }
      wm += (-I * zp / two_pi) * (D.transpose() * g);
    } else {
      const SinhContour& Dn = pl.down;
      const std::vector<cplx> ppd = phi_plus(pl.model, q, Dn.nodes, M);
      const std::vector<cplx> pmd = phi_from_identity(q, ppd, pl.psi_down);
      for (int k = 0; k < nm; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < Dn.size(); ++j) {
          const cplx xi = Dn.nodes[j];
          acc += std::exp(I * x * xi) * (pmd[j] - t.a_minus) * f.amp(xi) * Dn.ders[j] / (I * (xi - M.nodes[k]));
        }
        wm(k) += Dn.grid.zeta / two_pi * acc;
      }
    }
  }

  if (!h.f2.empty()) {
    // narrow contours for xi2, apex band just below 0
    const double lo_p = 0.2 * pl.model.profile.mu_plus;
    const double w2 = 0.5 * std::abs(P.omega);
    TrapezoidGrid g2 = P.grid;
    const SinhContour cup = SinhContour::from_band(-0.75 * lo_p, -0.25 * lo_p, w2, 0.9 * w2, g2);
    const SinhContour ccap = SinhContour::from_band(-0.75 * lo_p, -0.25 * lo_p, -w2, 0.9 * w2, g2);
    const double cap_apex = ccap.apex();
    for (const Osc2& f : h.f2) {
      const double xa = x2 - f.shift1, xb = x2 - f.shift2;
      if (xa < 0.0) fail(ErrorKind::unsupported, "general: x2 below the first shift of a 2D handle");
      const SinhContour& C2 = xb >= 0.0 ? cup : ccap;
      const int n2 = C2.size();
      std::vector<cplx> e2(n2);
      for (int m = 0; m < n2; ++m) e2[m] = std::exp(I * xb * C2.nodes[m]) * C2.ders[m];
      for (int j = 0; j < np; ++j) {
        const cplx xi1 = P.nodes[j];
        const cplx outer = std::exp(I * xa * xi1) * (t.minus_on_plus[j] - t.a_minus) * P.ders[j];
        std::vector<cplx> amp2(n2);
        for (int m = 0; m < n2; ++m) amp2[m] = e2[m] * f.amp(xi1, C2.nodes[m]);
        for (int k = 0; k < nm; ++k) {
          const cplx eta = M.nodes[k];
          cplx inner = 0.0;
          for (int m = 0; m < n2; ++m) inner += amp2[m] / (I * (eta - xi1 - C2.nodes[m]));
          inner *= C2.grid.zeta / two_pi;
          if (xb < 0.0) {
            const cplx p = eta - xi1;
            if (p.imag() < cap_apex && p.imag() > detail::curve_im_at(C2, p.real()))
              inner += std::exp(I * xb * p) * f.amp(xi1, p);
          }
          wm(k) += zp / two_pi * outer * inner;
        }
      }
    }
  }

  cplx t3 = 0.0;
  for (int k = 0; k < nm; ++k) {
    const cplx eta = M.nodes[k];
    t3 += std::exp(I * (x1 - x2) * eta) * (t.plus_on_minus[k] - t.a_plus) * wm(k) * M.ders[k];
  }
  t3 *= zm / two_pi;

  LaplaceValue v;
  v.q = q;
  v.parts[0] = t1;
  v.parts[1] = t.a_minus * t2 / q;
  v.parts[2] = t3 / q;
  v.value = v.parts[0] + v.parts[1] + v.parts[2];
  return v;
}

}  // namespace levymax
