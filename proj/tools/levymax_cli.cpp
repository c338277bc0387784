#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "levymax/error.hpp"
#include "levymax/golden.hpp"
#include "levymax/oracle.hpp"
#include "levymax/pricers.hpp"

using namespace levymax;

namespace {

struct Config {
  std::string model = "kobol";
  double nu = 1.2, lambda_plus = 1.0, lambda_minus = -2.0, m2 = 0.1, sigma = 0.2, mu = 0.0;
  std::string T = "1", a1 = "0", a2 = "0.1", x1 = "0", x2 = "0";
  double beta = 2.0;
  std::string payoff = "constant";
  double k = 0.0;
  double tol = 1e-11;
  std::string method = "sinh";
  int gwr_m = 8;
  double shift_a = -1.0;
  std::uint64_t seed = 20240601;
  long paths = 100000;
  std::string out;
  int digits = 16;
  double omega_plus = 0, omega_minus = 0, omega_ell = 0;
  int n_xi = 0, n_ell = 0;
  double q = 1.0;
  std::string xi = "0,0.5,1,2,5";
  std::string oracle = "bm";
  int table = 1;
  int runs = 10;
  std::string bench_T;
};

std::vector<double> parse_list(const std::string& s, const char* name) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::user, std::string("bad number in --") + name + ": " + item);
    }
  }
  if (v.empty()) fail(ErrorKind::user, std::string("empty list for --") + name);
  return v;
}

LevyModel build_model(const Config& c) {
  if (c.model == "kobol") return make_kobol_m2(c.m2, c.nu, c.lambda_plus, c.lambda_minus, c.mu);
  if (c.model == "brownian") return make_brownian(c.sigma, c.mu);
  fail(ErrorKind::user, "unknown model " + c.model);
}

LaplaceScheme build_scheme(const Config& c) {
  LaplaceScheme s;
  if (c.method == "sinh") s.method = Method::sinh;
  else if (c.method == "gwr") s.method = Method::gwr;
  else fail(ErrorKind::user, "unknown method " + c.method);
  s.gwr_m = c.gwr_m;
  s.shift_a = c.shift_a;
  if (c.omega_plus != 0) s.omega_plus = c.omega_plus;
  if (c.omega_minus != 0) s.omega_minus = c.omega_minus;
  if (c.omega_ell != 0) s.omega_ell = c.omega_ell;
  if (c.n_xi > 0) s.n_xi = c.n_xi;
  if (c.n_ell > 0) s.n_ell = c.n_ell;
  return s;
}

class Csv {
 public:
  Csv(const std::string& path, int digits) : digits_(digits) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(ErrorKind::user, "cannot open " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  std::string num(double v) const {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits_, v);
    return buf;
  }

 private:
  int digits_;
  std::ofstream file_;
};

const char* kHeader = "T,a1_or_h,a2,x1,x2,value,method,est_error,ms";
constexpr double kNone = std::numeric_limits<double>::quiet_NaN();

std::string row_fields(const Csv& csv, const PricingRow& r, PayoffKind kind) {
  const auto& p = r.point;
  double c1 = p.a1, c2 = p.a2, x2 = p.x2;
  if (kind == PayoffKind::no_touch) c1 = kNone;
  if (kind == PayoffKind::barrier) c1 = p.a2, c2 = kNone, x2 = kNone;
  if (kind == PayoffKind::exchange) c1 = kNone, c2 = kNone;
  return csv.num(p.T) + ',' + csv.num(c1) + ',' + csv.num(c2) + ',' + csv.num(p.x1) + ',' + csv.num(x2) + ',' +
         csv.num(r.value) + ',' + r.method + ',' + csv.num(r.est_error) + ',' + csv.num(r.ms);
}

void write_row(Csv& csv, const PricingRow& r, PayoffKind kind) { csv.os() << row_fields(csv, r, kind) << '\n'; }

void report_diag(const PricingDiagnostics& d) {
  std::cerr << "contours: N+=" << d.n_plus << " N-=" << d.n_minus << " Nmid=" << d.n_mid << " Nell=" << d.n_ell
            << "; ms contours " << d.ms_contours << ", main " << d.ms_main << ", inversion " << d.ms_invert << '\n';
  for (const auto& w : d.warnings) std::cerr << "warning: " << w << '\n';
}

int run_pricing(const Config& c, PayoffKind kind) {
  PricingTask task;
  task.model = build_model(c);
  task.kind = kind;
  task.tol = c.tol;
  if (kind == PayoffKind::barrier) {
    if (c.payoff == "constant") task.barrier.kind = BarrierPayoffKind::constant;
    else if (c.payoff == "digital-put") task.barrier.kind = BarrierPayoffKind::digital_put;
    else if (c.payoff == "exp-put") task.barrier.kind = BarrierPayoffKind::exp_put;
    else fail(ErrorKind::user, "unknown barrier payoff " + c.payoff);
    task.barrier.k = c.k;
  }
  auto Ts = parse_list(c.T, "T"), a1s = parse_list(c.a1, "a1"), a2s = parse_list(c.a2, "a2");
  auto x1s = parse_list(c.x1, "x1"), x2s = parse_list(c.x2, "x2");
  if (kind != PayoffKind::cpdf) a1s = {0.0};
  if (kind == PayoffKind::exchange) a2s = {0.0};
  if (kind == PayoffKind::barrier) x2s = {0.0};
  for (double T : Ts)
    for (double a2 : a2s)
      for (double a1 : a1s)
        for (double x1 : x1s)
          for (double x2 : x2s) {
            PricingPoint p;
            p.T = T, p.a1 = a1, p.a2 = a2, p.x1 = x1, p.x2 = x2, p.beta = c.beta;
            task.points.push_back(p);
          }
  auto res = price(task, build_scheme(c));
  Csv csv(c.out, c.digits);
  csv.os() << kHeader << '\n';
  for (const auto& r : res.rows) write_row(csv, r, kind);
  report_diag(res.diag);
  return 0;
}

int run_whf(const Config& c) {
  auto model = build_model(c);
  PipelineOptions po;
  po.tol = c.tol;
  auto pl = Pipeline::build(model, po);
  auto xs = parse_list(c.xi, "xi");
  std::vector<cplx> targets(xs.begin(), xs.end());
  auto pp = phi_plus(model, c.q, targets, pl.minus);
  auto pm = phi_minus(model, c.q, targets, pl.plus);
  Csv csv(c.out, c.digits);
  csv.os() << "q,xi,phi_plus_re,phi_plus_im,phi_minus_re,phi_minus_im,wh_residual\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double res = std::abs(pp[i] * pm[i] * (c.q + model.psi(targets[i])) / c.q - 1.0);
    csv.os() << csv.num(c.q) << ',' << csv.num(xs[i]) << ',' << csv.num(pp[i].real()) << ',' << csv.num(pp[i].imag())
             << ',' << csv.num(pm[i].real()) << ',' << csv.num(pm[i].imag()) << ',' << csv.num(res) << '\n';
  }
  return 0;
}

int run_oracle(const Config& c) {
  auto model = build_model(c);
  auto Ts = parse_list(c.T, "T"), a1s = parse_list(c.a1, "a1"), a2s = parse_list(c.a2, "a2");
  double x1 = parse_list(c.x1, "x1").front(), x2 = parse_list(c.x2, "x2").front();
  Csv csv(c.out, c.digits);
  csv.os() << kHeader << '\n';
  auto emit = [&](double T, double a1, double a2, const OracleReport& r, double ms) {
    PricingRow row;
    row.point.T = T, row.point.a1 = a1, row.point.a2 = a2, row.point.x1 = x1, row.point.x2 = x2;
    row.value = r.value, row.est_error = r.est_error, row.method = r.method, row.ms = ms;
    write_row(csv, row, PayoffKind::cpdf);
  };
  for (double T : Ts)
    for (double a2 : a2s)
      for (double a1 : a1s) {
        auto t0 = std::chrono::steady_clock::now();
        OracleReport r;
        if (c.oracle == "bm") {
          if (model.kind != ModelKind::brownian) fail(ErrorKind::user, "oracle bm needs --model brownian");
          r.method = "bm_closed_form";
          r.value = x2 > a2 ? 0.0 : bm_joint_cdf(c.sigma, c.mu, T, a1 - x1, a2 - x1);
        } else if (c.oracle == "bm-exchange") {
          if (model.kind != ModelKind::brownian) fail(ErrorKind::user, "oracle bm-exchange needs --model brownian");
          r = bm_exchange(c.sigma, c.mu, T, x1, x2, c.beta);
        } else if (c.oracle == "flat") {
          // value of the transform at real q; T is ignored
          r = flat_contour_cpdf_laplace(model, c.q, x1, x2, a1, a2);
        } else if (c.oracle == "mc") {
          McOptions mo;
          mo.seed = c.seed;
          mo.n_paths = c.paths;
          r = mc_joint_cdf(model, T, a1 - x1, a2 - x1, mo);
        } else {
          fail(ErrorKind::user, "unknown oracle " + c.oracle);
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        emit(c.oracle == "flat" ? kNone : T, a1, a2, r, ms);
      }
  return 0;
}

int run_bench(const Config& c) {
  const auto& g = golden_table(c.table);
  std::vector<GoldenCell> cells = g.active();
  if (!c.bench_T.empty()) {
    auto keep = parse_list(c.bench_T, "T");
    std::erase_if(cells, [&](const GoldenCell& x) { return std::find(keep.begin(), keep.end(), x.T) == keep.end(); });
  }
  if (cells.empty()) fail(ErrorKind::user, "no golden cells selected");
  PricingTask task;
  task.model = g.model();
  task.tol = c.tol;
  for (const auto& x : cells) {
    PricingPoint p;
    p.T = x.T, p.a1 = x.a1, p.a2 = x.a2;
    task.points.push_back(p);
  }
  auto scheme = build_scheme(c);
  bool gwr = scheme.method == Method::gwr;
  int runs = std::max(1, c.runs);
  std::vector<double> per_point;
  PricingResult res;
  for (int i = 0; i < runs; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    res = price(task, scheme);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    per_point.push_back(ms / task.points.size());
  }
  std::sort(per_point.begin(), per_point.end());
  double median = per_point[per_point.size() / 2];

  Csv csv(c.out, c.digits);
  csv.os() << kHeader << ",golden,abs_err,tol,pass,printed_err,ratio_to_printed,provenance\n";
  double max_err = 0.0;
  int n_fail = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& x = cells[i];
    auto row = res.rows[i];
    row.ms = median;
    double err = row.value - x.value;
    double tol = gwr ? 5e-5 : x.tol;
    bool ok = std::abs(err) <= tol;
    max_err = std::max(max_err, std::abs(err));
    n_fail += !ok;
    double printed = gwr ? x.err_gwr : x.err_sinh;
    csv.os() << row_fields(csv, row, PayoffKind::cpdf) << ',' << csv.num(x.value) << ',' << csv.num(std::abs(err)) << ',' << csv.num(tol) << ','
             << (ok ? "yes" : "no") << ',' << (printed != 0 ? csv.num(printed) : "") << ','
             << (printed != 0 ? csv.num(std::abs(err / printed)) : "") << ",\"" << x.provenance << "\"\n";
  }
  std::cerr << "table " << g.id << " (" << g.title << "), method " << c.method << ": " << cells.size()
            << " cells, max_abs_err " << max_err << ", failures " << n_fail << ", median ms per point " << median
            << " over " << runs << " runs\n";
  report_diag(res.diag);
  return n_fail == 0 ? 0 : 2;
}

// Flattens [section] key=value into --key value so the command line can override it.
std::vector<std::string> config_args(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const std::exception& e) {
    fail(ErrorKind::user, std::string("config: ") + e.what());
  }
  std::vector<std::string> out;
  auto add = [&](const std::string& key, const std::string& value) {
    out.push_back("--" + key);
    out.push_back(value);
  };
  for (const auto& [section, node] : tree) {
    if (node.empty()) add(section, node.data());
    for (const auto& [key, leaf] : node) add(key, leaf.data());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Joint distribution of a Levy process and its maximum: prices and benchmarks"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "INI file with [model] [task] [numeric] [output] sections");

  app.add_option("--model", c.model, "kobol | brownian")->capture_default_str();
  app.add_option("--nu", c.nu)->capture_default_str();
  app.add_option("--lambda-plus", c.lambda_plus)->capture_default_str();
  app.add_option("--lambda-minus", c.lambda_minus)->capture_default_str();
  app.add_option("--m2", c.m2, "second moment, fixes c")->capture_default_str();
  app.add_option("--sigma", c.sigma, "Brownian volatility")->capture_default_str();
  app.add_option("--mu", c.mu, "drift")->capture_default_str();
  app.add_option("--T", c.T, "maturities, comma separated")->capture_default_str();
  app.add_option("--a1", c.a1, "levels for X_T, comma separated")->capture_default_str();
  app.add_option("--a2", c.a2, "levels for the maximum (barrier for barrier)")->capture_default_str();
  app.add_option("--x1", c.x1, "starting X, comma separated")->capture_default_str();
  app.add_option("--x2", c.x2, "starting maximum, comma separated")->capture_default_str();
  app.add_option("--beta", c.beta, "exchange exponent")->capture_default_str();
  app.add_option("--payoff", c.payoff, "barrier payoff: constant | digital-put | exp-put")->capture_default_str();
  app.add_option("--k", c.k, "barrier payoff strike (log)")->capture_default_str();
  app.add_option("--tol", c.tol)->capture_default_str();
  app.add_option("--method", c.method, "sinh | gwr")->capture_default_str();
  app.add_option("--gwr-m", c.gwr_m)->capture_default_str();
  app.add_option("--shift-a", c.shift_a, "GWR shift, negative for automatic")->capture_default_str();
  app.add_option("--seed", c.seed)->capture_default_str();
  app.add_option("--paths", c.paths, "Monte Carlo paths")->capture_default_str();
  app.add_option("--out", c.out, "CSV path (stdout if empty)");
  app.add_option("--digits", c.digits)->capture_default_str()->check(CLI::Range(1, 17));
  app.add_option("--omega-plus", c.omega_plus, "angle override for L+");
  app.add_option("--omega-minus", c.omega_minus, "angle override for L-");
  app.add_option("--omega-ell", c.omega_ell, "angle override for the Bromwich contour");
  app.add_option("--n-xi", c.n_xi, "half-size override of the xi/eta grids");
  app.add_option("--n-ell", c.n_ell, "half-size override of the q grid");
  app.add_option("--q", c.q, "real Laplace variable (whf, flat oracle)")->capture_default_str();
  app.add_option("--xi", c.xi, "real points for whf")->capture_default_str();

  auto* s_cpdf = app.add_subcommand("cpdf", "P[X_T <= a1, max <= a2]");
  auto* s_nt = app.add_subcommand("no-touch", "P[max <= a2]");
  auto* s_bar = app.add_subcommand("barrier", "up-and-out with barrier a2, state x1");
  auto* s_ex = app.add_subcommand("exchange", "(e^{beta X} - e^{max})_+");
  auto* s_whf = app.add_subcommand("whf", "Wiener-Hopf factors at real q and real xi");
  auto* s_or = app.add_subcommand("oracle", "independent reference values");
  s_or->add_option("--kind", c.oracle, "bm | bm-exchange | flat | mc")->capture_default_str();
  auto* s_bench = app.add_subcommand("bench", "golden-table benchmark");
  s_bench->add_option("--table", c.table, "1, 2 or 3")->capture_default_str();
  s_bench->add_option("--runs", c.runs, "timing repetitions")->capture_default_str();
  s_bench->add_option("--only-T", c.bench_T, "restrict to these maturities");
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it != args.end() && it + 1 != args.end()) {
      auto extra = config_args(*(it + 1));
      args.insert(args.begin(), extra.begin(), extra.end());
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (s_cpdf->parsed()) return run_pricing(c, PayoffKind::cpdf);
    if (s_nt->parsed()) return run_pricing(c, PayoffKind::no_touch);
    if (s_bar->parsed()) return run_pricing(c, PayoffKind::barrier);
    if (s_ex->parsed()) return run_pricing(c, PayoffKind::exchange);
    if (s_whf->parsed()) return run_whf(c);
    if (s_or->parsed()) return run_oracle(c);
    if (s_bench->parsed()) return run_bench(c);
  } catch (const Error& e) {
    bool numerical = e.kind() == ErrorKind::numerical;
    std::cerr << (numerical ? "numerical failure: " : "error: ") << e.what() << '\n';
    return numerical ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
