#pragma once

#include <string>

#include "levymax/quad.hpp"

namespace levymax {

enum class OrderClass { zero_plus, regular, one_plus };

struct RegularityProfile {
  double nu = 1.0;
  OrderClass order = OrderClass::regular;
  double mu_minus = -1.0;  // strip of analyticity (mu_minus, mu_plus)
  double mu_plus = 1.0;
  double gamma_minus = -1.5707963267948966;
  double gamma_plus = 1.5707963267948966;
  double gamma_prime_minus = -1.5707963267948966;
  double gamma_prime_plus = 1.5707963267948966;
  double drift = 0.0;
  bool is_sl = true;
  bool signed_sl = false;

  // nu < 1 with nonzero drift: factors carry atoms and the single-contour path is not available
  bool finite_variation_with_drift() const { return nu < 1.0 && drift != 0.0; }
};

enum class ModelKind { kobol_symmetric, kobol_general, brownian };

struct LevyModel {
  ModelKind kind = ModelKind::kobol_symmetric;
  // c_plus weights positive jumps (decay rate -lambda_minus), c_minus negative ones (rate lambda_plus)
  double c_plus = 0.0, c_minus = 0.0;
  double nu_plus = 0.5, nu_minus = 0.5;
  double lambda_plus = 1.0, lambda_minus = -1.0;
  double sigma2 = 0.0;
  double mu = 0.0;
  RegularityProfile profile;

  cplx psi(cplx xi) const;
  cplx psi0(cplx xi) const;  // psi without the drift term
  double second_moment() const;  // psi''(0)
  double mean() const;           // E X_1 = i psi'(0)
  std::string describe() const;
};

LevyModel make_kobol(double c, double nu, double lambda_plus, double lambda_minus, double mu = 0.0);
LevyModel make_kobol_general(double c_plus, double c_minus, double nu_plus, double nu_minus, double lambda_plus,
                             double lambda_minus, double mu = 0.0);
// strip_half_width: the nominal strip reported in the profile; psi itself is entire
LevyModel make_brownian(double sigma, double mu = 0.0, double strip_half_width = 4.0);

// c such that psi''(0) = m2 for the symmetric-order KoBoL family
double calibrate_second_moment(double nu, double lambda_plus, double lambda_minus, double m2);

// Symmetric KoBoL with c calibrated from m2
LevyModel make_kobol_m2(double m2, double nu, double lambda_plus, double lambda_minus, double mu = 0.0);

// Leading coefficient of psi0(rho e^{i phi}) / rho^nu as rho -> infinity
cplx c_infinity(const LevyModel& model, double phi);

}  // namespace levymax
