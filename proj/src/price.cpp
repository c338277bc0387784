#include <chrono>
#include <cmath>
#include <map>
#include <numbers>

#include "levymax/error.hpp"
#include "levymax/parallel.hpp"
#include "levymax/pricers.hpp"

namespace levymax {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void check_point(const PricingTask& task, const PricingPoint& p) {
  if (!(p.T > 0.0) || !std::isfinite(p.T)) fail(ErrorKind::user, "maturity must be positive");
  if (!std::isfinite(p.x1) || !std::isfinite(p.x2) || !std::isfinite(p.a1) || !std::isfinite(p.a2))
    fail(ErrorKind::user, "non-finite point coordinates");
  switch (task.kind) {
    case PayoffKind::cpdf:
    case PayoffKind::no_touch:
    case PayoffKind::exchange:
      if (p.x1 > p.x2) fail(ErrorKind::domain, "state requires x1 <= x2");
      break;
    case PayoffKind::barrier:
      if (!(p.x1 < p.a2)) fail(ErrorKind::domain, "barrier: state must lie below the barrier");
      break;
  }
}

// Evaluates every point of a group at one table.
class GroupEvaluator {
 public:
  GroupEvaluator(const Pipeline& pl, const PricingTask& task, const std::vector<PricingPoint>& pts)
      : pl_(pl), task_(task), pts_(pts) {
    if (task.kind == PayoffKind::cpdf || task.kind == PayoffKind::no_touch) {
      std::vector<CpdfPoint> cp;
      for (const PricingPoint& p : pts) cp.push_back({p.x1, p.x2, p.a1, p.a2});
      batch_.emplace(pl, std::move(cp), task.kind == PayoffKind::no_touch);
    }
  }

  std::vector<cplx> operator()(cplx q) const {
    const WhfTable t = pl_.table(q);
    if (batch_) return batch_->evaluate(t);
    std::vector<cplx> out(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      const PricingPoint& p = pts_[i];
      if (task_.kind == PayoffKind::barrier)
        out[i] = barrier_laplace(pl_, t, p.x1, p.a2, task_.barrier).value;
      else
        out[i] = exchange_laplace(pl_, t, p.x1, p.x2, p.beta).value;
    }
    return out;
  }

 private:
  const Pipeline& pl_;
  const PricingTask& task_;
  const std::vector<PricingPoint>& pts_;
  std::optional<CpdfBatch> batch_;
};

PipelineOptions pipeline_options(const PricingTask& task, const LaplaceScheme& s, AngleRule rule, double beta) {
  PipelineOptions po;
  po.tol = task.tol;
  po.rule = rule;
  po.omega_plus = s.omega_plus;
  po.omega_minus = s.omega_minus;
  po.n_xi = s.n_xi;
  if (task.kind == PayoffKind::exchange) po = exchange_options(task.model, beta, po);
  return po;
}

}  // namespace

PricingResult price(const PricingTask& task, const LaplaceScheme& scheme) {
  if (!(task.tol > 0.0)) fail(ErrorKind::user, "tolerance must be positive");
  if (task.points.empty()) fail(ErrorKind::user, "no points to price");
  for (const PricingPoint& p : task.points) check_point(task, p);
  const bool drift_fv = task.model.profile.finite_variation_with_drift();
  if (drift_fv && scheme.method == Method::sinh)
    fail(ErrorKind::unsupported, "finite variation with drift: contours depend on q, use the gwr method");

  // group by maturity (and beta for the exchange payoff)
  std::map<std::pair<double, double>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < task.points.size(); ++i) {
    const PricingPoint& p = task.points[i];
    groups[{p.T, task.kind == PayoffKind::exchange ? p.beta : 0.0}].push_back(i);
  }

  PricingResult res;
  res.rows.resize(task.points.size());
  const char* mname = method_name(scheme.method);

  for (const auto& [key, idx] : groups) {
    const double T = key.first;
    std::vector<PricingPoint> pts;
    for (std::size_t i : idx) pts.push_back(task.points[i]);
    const auto t0 = clock_type::now();
    std::vector<double> values(pts.size());
    double est = task.tol;

    if (scheme.method == Method::sinh) {
      const AngleRule rule = scheme.rule == AngleRule::automatic ? AngleRule::family_II : scheme.rule;
      const Pipeline pl = Pipeline::build(task.model, pipeline_options(task, scheme, rule, key.second));
      res.diag.n_plus = pl.plus.size();
      res.diag.n_minus = pl.minus.size();
      res.diag.n_mid = pl.mid.size();
      ContourOptions bo;
      bo.rule = rule;
      bo.omega = scheme.omega_ell;
      bo.n_half = scheme.n_ell;
      bo.T = T;
      bo.sigma_floor = pl.sigma_floor;
      const BromwichContour bc = select_bromwich(task.model.profile, std::max(1e-2 * task.tol, 1e-16), bo);
      res.diag.n_ell = bc.size();
      res.diag.ms_contours += ms_since(t0);

      const auto t1 = clock_type::now();
      const GroupEvaluator ev(pl, task, pts);
      std::vector<std::vector<cplx>> tv(bc.size());
      parallel_for(bc.size(), [&](std::size_t j) { tv[j] = ev(bc.nodes[j]); }, scheme.threads);
      res.diag.ms_main += ms_since(t1);

      const auto t2 = clock_type::now();
      std::vector<cplx> col(bc.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int j = 0; j < bc.size(); ++j) col[j] = tv[j][i];
        values[i] = bromwich_combine(bc, T, col);
      }
      res.diag.ms_invert += ms_since(t2);
    } else {
      const AngleRule rule = scheme.rule == AngleRule::automatic ? AngleRule::sl : scheme.rule;
      GwrScheme gs;
      gs.M = scheme.gwr_m;
      gs.T = T;
      std::string warn;
      gs.validate(&warn);
      if (!warn.empty()) res.diag.warnings.push_back(warn);

      std::optional<Pipeline> shared;
      if (!drift_fv) {
        shared = Pipeline::build(task.model, pipeline_options(task, scheme, rule, key.second));
        res.diag.n_plus = shared->plus.size();
        res.diag.n_minus = shared->minus.size();
        res.diag.n_mid = shared->mid.size();
      }
      if (scheme.shift_a >= 0.0)
        gs.shift_a = scheme.shift_a;
      else
        gs.shift_a = shared ? std::max(0.0, shared->sigma_floor - std::numbers::ln2 / T) : 0.0;
      const std::vector<double> nodes = gwr_nodes(gs);
      res.diag.n_ell = static_cast<int>(nodes.size());
      res.diag.ms_contours += ms_since(t0);

      const auto t1 = clock_type::now();
      std::vector<std::vector<cplx>> tv(nodes.size());
      if (shared) {
        const GroupEvaluator ev(*shared, task, pts);
        parallel_for(nodes.size(), [&](std::size_t j) { tv[j] = ev(nodes[j]); }, scheme.threads);
      } else {
        parallel_for(
            nodes.size(),
            [&](std::size_t j) {
              PipelineOptions po = pipeline_options(task, scheme, rule, key.second);
              po.q_hint = nodes[j];
              const Pipeline pl = Pipeline::build(task.model, po);
              const GroupEvaluator ev(pl, task, pts);
              tv[j] = ev(nodes[j]);
            },
            scheme.threads);
      }
      res.diag.ms_main += ms_since(t1);

      const auto t2 = clock_type::now();
      std::vector<double> col(nodes.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) col[j] = tv[j][i].real();
        std::string w;
        values[i] = gwr_combine(gs, col, &w);
        if (!w.empty()) res.diag.warnings.push_back(w);
      }
      res.diag.ms_invert += ms_since(t2);
      est = std::pow(10.0, -0.9 * gs.M);
    }

    const double ms = ms_since(t0) / static_cast<double>(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (!std::isfinite(values[i])) fail(ErrorKind::numerical, "non-finite price");
      PricingRow& r = res.rows[idx[i]];
      r.point = pts[i];
      r.value = values[i];
      r.est_error = est;
      r.ms = ms;
      r.method = mname;
    }
  }
  return res;
}

}  // namespace levymax
