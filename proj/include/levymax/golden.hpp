#pragma once

#include <string>
#include <vector>

#include "levymax/models.hpp"

namespace levymax {

struct GoldenCell {
  double T = 0.0, a1 = 0.0, a2 = 0.0;
  double value = 0.0;
  double tol = 1e-10;
  bool excluded = false;  // printed value duplicates another block
  double err_gwr = 0.0;   // printed GWR error, 0 if none
  double err_sinh = 0.0;  // printed sinh-Bromwich error, 0 if none
  std::string provenance;
};

struct GoldenTable {
  int id = 0;
  std::string title;
  double m2 = 0.1, nu = 0.0, lambda_plus = 1.0, lambda_minus = -2.0;
  std::vector<GoldenCell> cells;

  LevyModel model() const { return make_kobol_m2(m2, nu, lambda_plus, lambda_minus); }
  std::vector<GoldenCell> active() const;
};

// 1: nu = 0.2, T = 0.25 with errors; 2: nu = 1.2 errors at T = 0.25 (values from 3);
// 3: nu = 1.2, T in {0.05, 0.25, 1, 5, 15}
const GoldenTable& golden_table(int id);

const std::vector<double>& golden_a1();
const std::vector<double>& golden_a2();

}  // namespace levymax
