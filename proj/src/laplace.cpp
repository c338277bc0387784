#include "levymax/laplace.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "levymax/error.hpp"

namespace levymax {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void GwrScheme::validate(std::string* warning) const {
  if (!(T > 0.0)) fail(ErrorKind::domain, "GWR: T must be positive");
  if (shift_a < 0.0) fail(ErrorKind::domain, "GWR: shift must be nonnegative");
  if (M < 6 || M > 10) fail(ErrorKind::domain, "GWR: M must lie in [6, 10]");
  if (M != 8 && warning) *warning = "GWR with M != 8 is outside the reliable window in double precision";
}

std::vector<double> gwr_nodes(const GwrScheme& s) {
  s.validate();
  std::vector<double> q(2 * s.M);
  const double tau = std::numbers::ln2 / s.T;
  for (int k = 1; k <= 2 * s.M; ++k) q[k - 1] = k * tau + s.shift_a;
  return q;
}

double gwr_combine(const GwrScheme& s, const std::vector<double>& v, std::string* warning) {
  s.validate(warning);
  const int M = s.M;
  if (static_cast<int>(v.size()) != 2 * M) fail(ErrorKind::domain, "GWR: need 2M transform values");
  const double tau = std::numbers::ln2 / s.T;
  // Gaver functionals f_j, j = 1..M; v[k-1] is the transform at k tau
  std::vector<double> f(M);
  for (int j = 1; j <= M; ++j) {
    long double acc = 0.0L;
    for (int l = 0; l <= j; ++l) acc += (l % 2 ? -1.0L : 1.0L) * binom(j, l) * v[j + l - 1];
    f[j - 1] = static_cast<double>(j * tau * binom(2 * j, j) * acc);
  }
  // Wynn rho; estimates live in the even columns, taken at the bottom index
  std::vector<double> prev(M + 1, 0.0), cur = f;
  double best = f[M - 1];
  for (int k = 1; k < M; ++k) {
    std::vector<double> next(M - k);
    bool broke = false;
    for (int j = 0; j < M - k; ++j) {
      const double den = cur[j + 1] - cur[j];
      if (den == 0.0 || !std::isfinite(den)) {
        broke = true;
        break;
      }
      next[j] = prev[j + 1] + k / den;
    }
    if (broke) {
      if (warning) {
        std::ostringstream os;
        os << "GWR: rho recursion stalled at column " << k << ", using the previous even column";
        *warning = os.str();
      }
      break;
    }
    if (k % 2 == 0) best = next[M - k - 1];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return std::exp(s.shift_a * s.T) * best;
}

double invert_gwr(const GwrScheme& s, const std::function<double(double)>& transform, std::string* warning) {
  const auto q = gwr_nodes(s);
  std::vector<double> v(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    v[k] = transform(q[k]);
    if (!std::isfinite(v[k])) {
      std::ostringstream os;
      os << "GWR: non-finite transform at q=" << q[k];
      fail(ErrorKind::numerical, os.str());
    }
  }
  return gwr_combine(s, v, warning);
}

std::vector<double> gaver_stehfest_coefficients(int M) {
  if (M < 1 || M > 20) fail(ErrorKind::domain, "Gaver-Stehfest: M must lie in [1, 20]");
  std::vector<double> z(2 * M);
  double mfact = std::tgamma(M + 1.0);
  for (int k = 1; k <= 2 * M; ++k) {
    long double acc = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, M); ++j)
      acc += std::pow(static_cast<long double>(j), M + 1) / mfact * binom(M, j) * binom(2 * j, j) * binom(j, k - j);
    z[k - 1] = static_cast<double>(((M + k) % 2 ? -1.0L : 1.0L) * acc);
  }
  return z;
}

double invert_gaver_stehfest(int M, double T, const std::function<double(double)>& transform) {
  if (!(T > 0.0)) fail(ErrorKind::domain, "Gaver-Stehfest: T must be positive");
  const auto z = gaver_stehfest_coefficients(M);
  const double tau = std::numbers::ln2 / T;
  long double acc = 0.0L;
  for (int k = 1; k <= 2 * M; ++k) acc += z[k - 1] * transform(k * tau);
  return static_cast<double>(tau * acc);
}

double bromwich_combine(const BromwichContour& c, double T, const std::vector<cplx>& values) {
  if (values.size() != c.nodes.size()) fail(ErrorKind::domain, "Bromwich: value count does not match the contour");
  long double acc = 0.0L;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const cplx t = std::exp(c.nodes[j] * T) * values[j] * (c.ders[j] / cplx(0.0, 1.0));
    if (!std::isfinite(t.real())) {
      std::ostringstream os;
      os << "Bromwich: non-finite term at node " << j << " (q=" << c.nodes[j] << ")";
      fail(ErrorKind::numerical, os.str());
    }
    acc += (j == 0 ? 0.5L : 1.0L) * t.real();
  }
  return c.grid.zeta / std::numbers::pi * static_cast<double>(acc);
}

double invert_sinh_bromwich(const BromwichContour& c, const std::function<cplx(cplx)>& transform, double T) {
  std::vector<cplx> v(c.nodes.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = transform(c.nodes[j]);
  return bromwich_combine(c, T, v);
}

}  // namespace levymax
