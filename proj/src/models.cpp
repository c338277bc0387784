#include "levymax/models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "levymax/error.hpp"

namespace levymax {

namespace {

constexpr double half_pi = std::numbers::pi / 2;

void check_nu(double nu) {
  if (!(nu > 0.0 && nu < 2.0)) fail(ErrorKind::domain, "KoBoL order must lie in (0,2)");
  if (nu == 1.0) fail(ErrorKind::unsupported, "KoBoL with nu=1 uses a different closed form and is not supported");
}

void check_lambdas(double lp, double lm) {
  if (!(lm <= 0.0 && lp >= 0.0 && lm < lp) || (lm == 0.0 && lp == 0.0))
    fail(ErrorKind::domain, "KoBoL requires lambda_minus <= 0 <= lambda_plus, not both zero");
}

RegularityProfile kobol_profile(double nu, double lp, double lm, double mu) {
  RegularityProfile p;
  p.nu = nu;
  p.order = OrderClass::regular;
  p.mu_minus = lm;
  p.mu_plus = lp;
  p.drift = mu;
  p.is_sl = true;
  return p;
}

// (base)^nu on the principal branch; base on (-inf,0] is a cut
cplx cut_pow(cplx base, double nu, const char* which) {
  if (base.imag() == 0.0 && base.real() <= 0.0) {
    std::ostringstream os;
    os << "psi evaluated on the cut of " << which;
    fail(ErrorKind::domain, os.str());
  }
  return std::pow(base, nu);
}

}  // namespace

cplx LevyModel::psi0(cplx xi) const {
  if (kind == ModelKind::brownian) return 0.5 * sigma2 * xi * xi;
  const cplx i(0.0, 1.0);
  cplx out = 0.0;
  if (c_plus != 0.0)
    out += c_plus * std::tgamma(-nu_plus) *
           (std::pow(-lambda_minus, nu_plus) - cut_pow(-lambda_minus - i * xi, nu_plus, "(-lambda_minus - i xi)^nu"));
  if (c_minus != 0.0)
    out += c_minus * std::tgamma(-nu_minus) *
           (std::pow(lambda_plus, nu_minus) - cut_pow(lambda_plus + i * xi, nu_minus, "(lambda_plus + i xi)^nu"));
  return out;
}

cplx LevyModel::psi(cplx xi) const { return psi0(xi) - cplx(0.0, mu) * xi; }

double LevyModel::second_moment() const {
  if (kind == ModelKind::brownian) return sigma2;
  double m = 0.0;
  if (c_plus != 0.0) m += c_plus * std::tgamma(2.0 - nu_plus) * std::pow(-lambda_minus, nu_plus - 2.0);
  if (c_minus != 0.0) m += c_minus * std::tgamma(2.0 - nu_minus) * std::pow(lambda_plus, nu_minus - 2.0);
  return m;
}

double LevyModel::mean() const {
  double m = mu;
  if (kind == ModelKind::brownian) return m;
  if (c_plus != 0.0) m += c_plus * std::tgamma(1.0 - nu_plus) * std::pow(-lambda_minus, nu_plus - 1.0);
  if (c_minus != 0.0) m -= c_minus * std::tgamma(1.0 - nu_minus) * std::pow(lambda_plus, nu_minus - 1.0);
  return m;
}

std::string LevyModel::describe() const {
  std::ostringstream os;
  os.precision(16);
  if (kind == ModelKind::brownian) {
    os << "brownian sigma2=" << sigma2 << " mu=" << mu;
  } else {
    os << "kobol c+=" << c_plus << " c-=" << c_minus << " nu+=" << nu_plus << " nu-=" << nu_minus
       << " lambda+=" << lambda_plus << " lambda-=" << lambda_minus << " mu=" << mu;
  }
  return os.str();
}

LevyModel make_kobol(double c, double nu, double lambda_plus, double lambda_minus, double mu) {
  if (!(c > 0.0)) fail(ErrorKind::domain, "KoBoL intensity c must be positive");
  check_nu(nu);
  check_lambdas(lambda_plus, lambda_minus);
  LevyModel m;
  m.kind = ModelKind::kobol_symmetric;
  m.c_plus = m.c_minus = c;
  m.nu_plus = m.nu_minus = nu;
  m.lambda_plus = lambda_plus;
  m.lambda_minus = lambda_minus;
  m.mu = mu;
  m.profile = kobol_profile(nu, lambda_plus, lambda_minus, mu);
  return m;
}

LevyModel make_kobol_general(double c_plus, double c_minus, double nu_plus, double nu_minus, double lambda_plus,
                             double lambda_minus, double mu) {
  if (c_plus < 0.0 || c_minus < 0.0 || c_plus + c_minus == 0.0)
    fail(ErrorKind::domain, "KoBoL intensities must be nonnegative and not both zero");
  if (c_plus > 0.0) check_nu(nu_plus);
  if (c_minus > 0.0) check_nu(nu_minus);
  check_lambdas(lambda_plus, lambda_minus);
  LevyModel m;
  m.kind = ModelKind::kobol_general;
  m.c_plus = c_plus;
  m.c_minus = c_minus;
  m.nu_plus = nu_plus;
  m.nu_minus = nu_minus;
  m.lambda_plus = lambda_plus;
  m.lambda_minus = lambda_minus;
  m.mu = mu;
  const double nu = std::max(c_plus > 0.0 ? nu_plus : 0.0, c_minus > 0.0 ? nu_minus : 0.0);
  m.profile = kobol_profile(nu, lambda_plus, lambda_minus, mu);
  return m;
}

LevyModel make_brownian(double sigma, double mu, double strip_half_width) {
  if (!(sigma > 0.0)) fail(ErrorKind::domain, "Brownian sigma must be positive");
  if (!(strip_half_width > 0.0)) fail(ErrorKind::domain, "Brownian strip half-width must be positive");
  LevyModel m;
  m.kind = ModelKind::brownian;
  m.sigma2 = sigma * sigma;
  m.mu = mu;
  RegularityProfile& p = m.profile;
  p.nu = 2.0;
  p.order = OrderClass::regular;
  p.mu_minus = -strip_half_width;
  p.mu_plus = strip_half_width;
  p.gamma_minus = -half_pi;
  p.gamma_plus = half_pi;
  p.gamma_prime_minus = -half_pi / 2;
  p.gamma_prime_plus = half_pi / 2;
  p.drift = mu;
  p.is_sl = true;
  return m;
}

double calibrate_second_moment(double nu, double lambda_plus, double lambda_minus, double m2) {
  if (!(m2 > 0.0)) fail(ErrorKind::domain, "second moment must be positive");
  check_nu(nu);
  check_lambdas(lambda_plus, lambda_minus);
  double s = 0.0;
  if (lambda_minus < 0.0) s += std::pow(-lambda_minus, nu - 2.0);
  if (lambda_plus > 0.0) s += std::pow(lambda_plus, nu - 2.0);
  return m2 / (std::tgamma(2.0 - nu) * s);
}

LevyModel make_kobol_m2(double m2, double nu, double lambda_plus, double lambda_minus, double mu) {
  return make_kobol(calibrate_second_moment(nu, lambda_plus, lambda_minus, m2), nu, lambda_plus, lambda_minus, mu);
}

cplx c_infinity(const LevyModel& model, double phi) {
  const RegularityProfile& p = model.profile;
  if (!(phi > p.gamma_minus && phi < p.gamma_plus)) fail(ErrorKind::domain, "c_infinity: angle outside the cone");
  const cplx i(0.0, 1.0);
  if (model.kind == ModelKind::brownian) return 0.5 * model.sigma2 * std::exp(2.0 * i * phi);
  const double nu = p.nu;
  cplx c = 0.0;
  // (-i xi)^nu = rho^nu e^{i nu (phi - pi/2)},  (i xi)^nu = rho^nu e^{i nu (phi + pi/2)}
  if (model.c_plus > 0.0 && model.nu_plus == nu)
    c -= model.c_plus * std::tgamma(-nu) * std::exp(i * nu * (phi - half_pi));
  if (model.c_minus > 0.0 && model.nu_minus == nu)
    c -= model.c_minus * std::tgamma(-nu) * std::exp(i * nu * (phi + half_pi));
  return c;
}

}  // namespace levymax
