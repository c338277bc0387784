#pragma once

#include <functional>
#include <vector>

#include "levymax/pricers.hpp"

namespace levymax::detail {

// Im of the curve c at the given real part
double curve_im_at(const SinhContour& c, double re);
bool strictly_below(const SinhContour& lower, const SinhContour& upper);
std::vector<cplx> psi_on(const LevyModel& m, const SinhContour& c);

// (1/2pi) int e^{i x xi} coef(xi) / (q + psi(xi)) d xi, apex above 0; wings follow sign(x)
cplx one_dim_integral(const Pipeline& pl, cplx q, double x, const std::function<cplx(cplx)>& coef);

}  // namespace levymax::detail
