#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levymax/contours.hpp"
#include "levymax/laplace.hpp"
#include "levymax/models.hpp"
#include "levymax/whf.hpp"

namespace levymax {

struct PipelineOptions {
  double tol = 1e-12;
  AngleRule rule = AngleRule::family_II;
  std::optional<double> omega_plus, omega_minus;  // magnitudes
  std::optional<int> n_xi;
  std::optional<double> zeta;
  std::optional<double> minus_band_lo, minus_band_hi;
  std::optional<double> q_hint;  // finite variation with drift: bands depend on q
};

// Contours and cached exponent values shared by every q of one inversion.
struct Pipeline {
  LevyModel model;
  PipelineOptions opts;
  SinhContour plus, minus;  // L+ (apex above 0, wings up), L- (apex below 0, wings down)
  SinhContour mid;          // apex above 0, flat
  SinhContour down;         // apex above 0, wings down, lies above L-
  SinhContour up;           // apex below 0, wings up, lies below L+
  std::vector<cplx> psi_mid, psi_down, psi_up;
  std::shared_ptr<const WhfEngine> engine;
  double sigma_floor = 0.0;  // Re q above this keeps q + psi(i y) > 0 on every apex band

  static Pipeline build(const LevyModel& model, const PipelineOptions& opts);
  WhfTable table(cplx q) const { return engine->table(q); }
  const std::vector<cplx>& psi_plus() const { return engine->psi_plus(); }
  const std::vector<cplx>& psi_minus() const { return engine->psi_minus(); }
};

struct LaplaceValue {
  cplx q;
  cplx value;
  cplx parts[3] = {0.0, 0.0, 0.0};  // I1, I2, I3
};

LaplaceValue cpdf_laplace(const Pipeline& pl, const WhfTable& t, double x1, double x2, double a1, double a2);
LaplaceValue no_touch_laplace(const Pipeline& pl, const WhfTable& t, double x1, double x2, double a2);

struct CpdfPoint {
  double x1 = 0.0, x2 = 0.0, a1 = 0.0, a2 = 0.0;
};

// Many cpdf / no-touch points at once; exponentials are prepared once and the
// 2D sums share one kernel product per distinct x1 - a2.
class CpdfBatch {
 public:
  CpdfBatch(const Pipeline& pl, std::vector<CpdfPoint> points, bool no_touch = false);
  std::vector<cplx> evaluate(const WhfTable& t) const;
  std::size_t size() const { return points_.size(); }

 private:
  enum class Route { zero, no_touch, atom, cpdf };
  struct Prepared {
    Route route = Route::cpdf;
    int sign = 0;  // sign of x1 - a1
    int group = -1;
    int e1 = -1;   // index into one-dim exponential vectors
    int ev = -1;   // index into L+ exponential vectors
  };
  const Pipeline* pl_;
  std::vector<CpdfPoint> points_;
  std::vector<Prepared> prep_;
  Eigen::MatrixXcd eu_;              // e^{i(x1-a2) eta} der- per group (columns)
  std::vector<Eigen::VectorXcd> e1_;  // one-dim weights (L+ or L-)
  std::vector<Eigen::VectorXcd> ev_;  // e^{i(a2-a1) xi} der+/xi
  Eigen::VectorXcd mid_w_;
};

enum class BarrierPayoffKind { constant, digital_put, exp_put };

struct BarrierPayoff {
  BarrierPayoffKind kind = BarrierPayoffKind::constant;
  double k = 0.0;      // strike level for the put-type payoffs
  double scale = 1.0;  // constant value, or multiplier
};

// Up-and-out: E[G(x + X_T) 1{max < h}], x < h
LaplaceValue barrier_laplace(const Pipeline& pl, const WhfTable& t, double x, double h, const BarrierPayoff& g);

// Options for a pipeline whose L- lies below -beta
PipelineOptions exchange_options(const LevyModel& model, double beta, PipelineOptions base);

// (e^{beta x1} - e^{x2})_+ with x1 <= x2, x2 >= 0
LaplaceValue exchange_laplace(const Pipeline& pl, const WhfTable& t, double x1, double x2, double beta);

// Payoff transforms given as sums of amp(z) e^{-i shift z}.
struct Osc1 {
  std::function<cplx(cplx)> amp;
  double shift = 0.0;
};
struct Osc2 {
  std::function<cplx(cplx, cplx)> amp;
  double shift1 = 0.0, shift2 = 0.0;
};
struct GeneralHandles {
  std::vector<Osc1> f1;  // transform of f+ in x1 at fixed x2
  std::vector<Osc1> w0;  // transform of w0 in y at fixed x2
  std::vector<Osc2> f2;  // 2D transform of f+
};

// Handles of the joint cpdf payoff 1{x1 <= a1} 1{x2 <= a2}
GeneralHandles cpdf_handles(double x2, double a1, double a2);

LaplaceValue laplace_value_general(const Pipeline& pl, const WhfTable& t, double x1, double x2,
                                   const GeneralHandles& h);

enum class PayoffKind { cpdf, no_touch, barrier, exchange };
enum class Method { sinh, gwr };

// cpdf: (x1, x2, a1, a2); no-touch: (x1, x2, a2); barrier: x1 is the state, a2 the
// barrier; exchange: (x1, x2, beta)
struct PricingPoint {
  double T = 1.0;
  double x1 = 0.0, x2 = 0.0, a1 = 0.0, a2 = 0.0;
  double beta = 2.0;
};

struct PricingTask {
  LevyModel model;
  PayoffKind kind = PayoffKind::cpdf;
  std::vector<PricingPoint> points;
  BarrierPayoff barrier;
  double tol = 1e-12;
};

struct LaplaceScheme {
  Method method = Method::sinh;
  int gwr_m = 8;
  double shift_a = -1.0;  // negative selects the automatic shift
  AngleRule rule = AngleRule::automatic;  // automatic: family II for sinh, SL rule for GWR
  std::optional<double> omega_plus, omega_minus, omega_ell;
  std::optional<int> n_xi, n_ell;
  unsigned threads = 0;
};

struct PricingRow {
  PricingPoint point;
  double value = 0.0;
  double est_error = 0.0;
  double ms = 0.0;
  std::string method;
};

struct PricingDiagnostics {
  int n_plus = 0, n_minus = 0, n_mid = 0, n_ell = 0;
  double ms_contours = 0.0, ms_main = 0.0, ms_invert = 0.0;
  std::vector<std::string> warnings;
};

struct PricingResult {
  std::vector<PricingRow> rows;
  PricingDiagnostics diag;
};

PricingResult price(const PricingTask& task, const LaplaceScheme& scheme);

const char* method_name(Method m);

}  // namespace levymax
