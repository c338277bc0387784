#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "levymax/contours.hpp"
#include "levymax/models.hpp"

namespace levymax {

// Factors at one q. For real q > 0 the atoms are real and lie in [0,1];
// on the Bromwich contour they are complex.
struct WhfTable {
  cplx q;
  std::vector<cplx> plus_on_minus;   // phi+ at nodes of L-
  std::vector<cplx> minus_on_plus;   // phi- at nodes of L+
  std::vector<cplx> plus_on_plus;    // phi+ at nodes of L+
  std::vector<cplx> minus_on_minus;  // phi- at nodes of L-
  cplx a_plus = 0.0, a_minus = 0.0;
  std::vector<cplx> psi_plus, psi_minus;
};

// phi+_q at targets lying above the integration contour.
std::vector<cplx> phi_plus(const LevyModel& model, cplx q, const std::vector<cplx>& targets,
                           const SinhContour& below);
// phi-_q at targets lying below the integration contour.
std::vector<cplx> phi_minus(const LevyModel& model, cplx q, const std::vector<cplx>& targets,
                            const SinhContour& above);

// q / ((q + psi) * other), elementwise
std::vector<cplx> phi_from_identity(cplx q, const std::vector<cplx>& phi_other, const std::vector<cplx>& psi_values);

enum class Side { plus, minus };

struct Decomposition {
  cplx atom = 0.0;
  std::function<cplx(cplx)> reduced;  // phi minus its atom
};

// Splits phi+- into atom + remainder. The evaluator integrates over the given contour
// (below the argument for Side::plus, above it for Side::minus).
Decomposition decompose(const LevyModel& model, cplx q, Side side, const SinhContour& integration);

// Factor tables for many q on a fixed pair of contours; the Cauchy kernel is built once.
class WhfEngine {
 public:
  WhfEngine(const LevyModel& model, SinhContour plus, SinhContour minus);

  WhfTable table(cplx q) const;

  const LevyModel& model() const { return model_; }
  const SinhContour& plus() const { return plus_; }
  const SinhContour& minus() const { return minus_; }
  // D(j,k) = 1/(xi+_j - xi-_k)
  const Eigen::MatrixXcd& kernel() const { return D_; }
  const std::vector<cplx>& psi_plus() const { return psi_plus_; }
  const std::vector<cplx>& psi_minus() const { return psi_minus_; }

 private:
  LevyModel model_;
  SinhContour plus_, minus_;
  Eigen::MatrixXcd D_;
  std::vector<cplx> psi_plus_, psi_minus_, psi0_plus_, psi0_minus_;
  bool drift_split_ = false;
};

}  // namespace levymax
