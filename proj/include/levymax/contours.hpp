#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levymax/models.hpp"
#include "levymax/quad.hpp"

namespace levymax {

// chi(y) = i omega1 + b sinh(i omega + y)
struct SinhContour {
  double omega1 = 0.0;
  double b = 1.0;
  double omega = 0.0;
  double d = 0.1;  // half-width of the analyticity strip in y
  TrapezoidGrid grid;
  std::vector<cplx> nodes;
  std::vector<cplx> ders;

  double apex() const;
  cplx at(cplx y) const;
  cplx der_at(cplx y) const;
  int size() const { return static_cast<int>(nodes.size()); }

  static SinhContour make(double omega1, double b, double omega, double d, const TrapezoidGrid& grid);
  // Apex family of the strip |Im y| < d sits inside (lo, hi).
  static SinhContour from_band(double lo, double hi, double omega, double d, const TrapezoidGrid& grid);
};

// q(y) = sigma + i b sinh(i omega + y), y >= 0; conjugate symmetry supplies y < 0
struct BromwichContour {
  double sigma = 1.0;
  double b = 1.0;
  double omega = 0.1;
  double d = 0.1;
  TrapezoidGrid grid;
  std::vector<cplx> nodes;
  std::vector<cplx> ders;  // dq/dy

  double apex() const { return sigma - b * std::sin(omega); }
  int size() const { return static_cast<int>(nodes.size()); }
  static BromwichContour make(double sigma, double b, double omega, double d, const TrapezoidGrid& grid);
};

enum class ContourRole { xi_plus, eta_minus, one_dim, bromwich };

enum class AngleRule {
  automatic,  // sl or signed_sl from the profile
  sl,         // +-(pi/4) min(1, 1/nu)
  signed_sl,  // +-pi/8
  family_I,   // +-(pi/9) min(1, 1/nu), Bromwich pi/18
  family_II,  // +-(pi/10) min(1, 1/nu), Bromwich pi/20
};

struct ContourOptions {
  AngleRule rule = AngleRule::automatic;
  std::optional<double> omega;  // overrides the rule (signed)
  std::optional<double> zeta;
  std::optional<int> n_half;
  std::optional<double> band_lo, band_hi;  // explicit Im band for the apex family
  double band_lo_frac = 0.2, band_hi_frac = 0.8;
  int one_dim_sign = 0;      // sign of x1 - a1; 0 selects the midpoint contour
  double T = 1.0;            // Bromwich only
  double sigma_floor = 0.0;  // Bromwich only: lower bound for the apex
  double hardy_norm = 10.0;
};

double rule_angle(const RegularityProfile& profile, AngleRule rule);
double rule_bromwich_angle(AngleRule rule);

SinhContour select_params(const RegularityProfile& profile, ContourRole role, double tol,
                          const ContourOptions& opts = {});
BromwichContour select_bromwich(const RegularityProfile& profile, double tol, const ContourOptions& opts = {});

struct DeformationReport {
  bool ok = true;
  double min_cut_distance = 0.0;
  std::vector<std::pair<cplx, cplx>> offending;  // (q, node)
  std::string summary() const;
};

DeformationReport validate_deformation(const LevyModel& model, const SinhContour& contour,
                                       const std::vector<cplx>& q_set, double floor = 1e-8);

}  // namespace levymax
