#include "levymax/whf.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "levymax/error.hpp"

namespace levymax {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const cplx I(0.0, 1.0);

bool uses_drift_split(const LevyModel& m) { return m.profile.finite_variation_with_drift(); }

cplx safe_log(cplx z, cplx q, cplx node) {
  if (z.real() <= 0.0 && std::abs(z.imag()) <= 1e-14 * std::abs(z)) {
    std::ostringstream os;
    os << "log argument on the cut (-inf,0]: q=" << q << " node=" << node;
    fail(ErrorKind::numerical, os.str());
  }
  return std::log(z);
}

// ln(1 + psi/q), or ln(1 + psi0/(q - i mu eta)) when the drift is split off
cplx log_term(const LevyModel& m, bool split, cplx q, cplx eta, cplx psi, cplx psi0) {
  if (!split) return safe_log(1.0 + psi / q, q, eta);
  const cplx den = q - I * m.mu * eta;
  if (std::abs(den) == 0.0) fail(ErrorKind::numerical, "q - i mu eta vanishes on the contour");
  return safe_log(1.0 + psi0 / den, q, eta);
}

cplx drift_prefactor(const LevyModel& m, bool split, Side side, cplx q, cplx xi) {
  if (!split) return 1.0;
  if ((side == Side::plus && m.mu > 0.0) || (side == Side::minus && m.mu < 0.0)) return q / (q - I * m.mu * xi);
  return 1.0;
}

std::vector<cplx> weights(const LevyModel& m, cplx q, const SinhContour& c) {
  const bool split = uses_drift_split(m);
  std::vector<cplx> s(c.nodes.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const cplx eta = c.nodes[k];
    s[k] = log_term(m, split, q, eta, m.psi(eta), m.psi0(eta)) / eta * c.ders[k];
  }
  return s;
}

cplx cauchy_sum(const std::vector<cplx>& s, const SinhContour& c, cplx xi) {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const cplx diff = xi - c.nodes[k];
    if (std::abs(diff) < 1e-12 * (1.0 + std::abs(xi))) {
      std::ostringstream os;
      os << "singular Cauchy kernel: target " << xi << " coincides with node " << c.nodes[k];
      fail(ErrorKind::numerical, os.str());
    }
    acc += s[k] / diff;
  }
  return acc;
}

}  // namespace

std::vector<cplx> phi_plus(const LevyModel& model, cplx q, const std::vector<cplx>& targets,
                           const SinhContour& below) {
  const bool split = uses_drift_split(model);
  const auto s = weights(model, q, below);
  const cplx f = -I * below.grid.zeta / two_pi;
  std::vector<cplx> out(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const cplx xi = targets[j];
    out[j] = drift_prefactor(model, split, Side::plus, q, xi) * std::exp(f * xi * cauchy_sum(s, below, xi));
  }
  return out;
}

std::vector<cplx> phi_minus(const LevyModel& model, cplx q, const std::vector<cplx>& targets,
                            const SinhContour& above) {
  const bool split = uses_drift_split(model);
  const auto s = weights(model, q, above);
  const cplx f = I * above.grid.zeta / two_pi;
  std::vector<cplx> out(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const cplx xi = targets[j];
    out[j] = drift_prefactor(model, split, Side::minus, q, xi) * std::exp(f * xi * cauchy_sum(s, above, xi));
  }
  return out;
}

std::vector<cplx> phi_from_identity(cplx q, const std::vector<cplx>& other, const std::vector<cplx>& psi) {
  if (other.size() != psi.size()) fail(ErrorKind::domain, "phi_from_identity: size mismatch");
  std::vector<cplx> out(other.size());
  for (std::size_t k = 0; k < other.size(); ++k) {
    const cplx den = (q + psi[k]) * other[k];
    if (den == 0.0) fail(ErrorKind::numerical, "phi_from_identity: zero divisor, contour invalid for this q");
    out[k] = q / den;
  }
  return out;
}

Decomposition decompose(const LevyModel& model, cplx q, Side side, const SinhContour& c) {
  const RegularityProfile& p = model.profile;
  if (p.order == OrderClass::zero_plus && p.drift == 0.0)
    fail(ErrorKind::unsupported, "driftless order-0+ processes need a separate treatment");
  Decomposition out;
  const bool split = uses_drift_split(model);
  const bool has_atom = split && ((side == Side::minus && model.mu > 0.0) || (side == Side::plus && model.mu < 0.0));
  if (has_atom) {
    const auto s = weights(model, q, c);
    cplx acc = 0.0;
    for (const cplx& v : s) acc += v;
    const cplx sgn = side == Side::minus ? 1.0 : -1.0;
    out.atom = std::exp(sgn * I * c.grid.zeta / two_pi * acc);
  }
  const cplx atom = out.atom;
  if (side == Side::plus) {
    out.reduced = [model, q, c, atom](cplx xi) { return phi_plus(model, q, {xi}, c)[0] - atom; };
  } else {
    out.reduced = [model, q, c, atom](cplx xi) { return phi_minus(model, q, {xi}, c)[0] - atom; };
  }
  return out;
}

WhfEngine::WhfEngine(const LevyModel& model, SinhContour plus, SinhContour minus)
    : model_(model), plus_(std::move(plus)), minus_(std::move(minus)) {
  if (!(plus_.apex() > minus_.apex())) fail(ErrorKind::domain, "WH contours: L+ apex must lie above the L- apex");
  drift_split_ = uses_drift_split(model_);
  const int np = plus_.size(), nm = minus_.size();
  D_.resize(np, nm);
  for (int k = 0; k < nm; ++k)
    for (int j = 0; j < np; ++j) D_(j, k) = 1.0 / (plus_.nodes[j] - minus_.nodes[k]);
  psi_plus_.resize(np);
  psi0_plus_.resize(np);
  for (int j = 0; j < np; ++j) {
    psi_plus_[j] = model_.psi(plus_.nodes[j]);
    psi0_plus_[j] = model_.psi0(plus_.nodes[j]);
  }
  psi_minus_.resize(nm);
  psi0_minus_.resize(nm);
  for (int k = 0; k < nm; ++k) {
    psi_minus_[k] = model_.psi(minus_.nodes[k]);
    psi0_minus_[k] = model_.psi0(minus_.nodes[k]);
  }
}

WhfTable WhfEngine::table(cplx q) const {
  const int np = plus_.size(), nm = minus_.size();
  Eigen::VectorXcd sp(np), sm(nm);
  for (int j = 0; j < np; ++j) {
    const cplx xi = plus_.nodes[j];
    sp(j) = log_term(model_, drift_split_, q, xi, psi_plus_[j], psi0_plus_[j]) / xi * plus_.ders[j];
  }
  for (int k = 0; k < nm; ++k) {
    const cplx eta = minus_.nodes[k];
    sm(k) = log_term(model_, drift_split_, q, eta, psi_minus_[k], psi0_minus_[k]) / eta * minus_.ders[k];
  }
  const Eigen::VectorXcd up = D_ * sm;                // sum over L- for targets on L+
  const Eigen::VectorXcd dn = D_.transpose() * sp;  // sum over L+ for targets on L-, up to sign

  WhfTable t;
  t.q = q;
  t.psi_plus = psi_plus_;
  t.psi_minus = psi_minus_;
  t.plus_on_plus.resize(np);
  t.minus_on_minus.resize(nm);
  const cplx fp = -I * minus_.grid.zeta / two_pi;
  const cplx fm = -I * plus_.grid.zeta / two_pi;  // D- = -D^T folds the sign
  for (int j = 0; j < np; ++j) {
    const cplx xi = plus_.nodes[j];
    t.plus_on_plus[j] = drift_prefactor(model_, drift_split_, Side::plus, q, xi) * std::exp(fp * xi * up(j));
  }
  for (int k = 0; k < nm; ++k) {
    const cplx eta = minus_.nodes[k];
    t.minus_on_minus[k] = drift_prefactor(model_, drift_split_, Side::minus, q, eta) * std::exp(fm * eta * dn(k));
  }
  t.plus_on_minus = phi_from_identity(q, t.minus_on_minus, psi_minus_);
  t.minus_on_plus = phi_from_identity(q, t.plus_on_plus, psi_plus_);
  if (drift_split_) {
    if (model_.mu > 0.0) t.a_minus = std::exp(I * plus_.grid.zeta / two_pi * sp.sum());
    if (model_.mu < 0.0) t.a_plus = std::exp(-I * minus_.grid.zeta / two_pi * sm.sum());
  }
  return t;
}

}  // namespace levymax
