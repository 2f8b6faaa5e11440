#include "runs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "csv.hpp"
#include "lcthermo/lcthermo.h"
#include "svg.hpp"

namespace cli {

namespace {

constexpr double kAtomicMass = 1.66053906660e-27;

void check(lct_status s) {
  switch (s) {
    case LCT_OK:
      return;
    case LCT_ERR_DOMAIN:
    case LCT_ERR_CONFIG:
      throw RunError(kConfigError, lct_last_error());
    case LCT_ERR_UNSTABLE:
      throw RunError(kStabilityRefusal, lct_last_error());
    default:
      throw RunError(kNumericalFailure, lct_last_error());
  }
}

struct ModelDeleter {
  void operator()(lct_model* m) const { lct_model_free(m); }
};
struct CycleDeleter {
  void operator()(lct_cycle* c) const { lct_cycle_free(c); }
};
struct ChartDeleter {
  void operator()(lct_chart* c) const { lct_chart_free(c); }
};
struct BathDeleter {
  void operator()(lct_bath* b) const { lct_bath_free(b); }
};
struct SystemDeleter {
  void operator()(lct_system* s) const { lct_system_free(s); }
};
using Model = std::unique_ptr<lct_model, ModelDeleter>;
using Cycle = std::unique_ptr<lct_cycle, CycleDeleter>;
using Chart = std::unique_ptr<lct_chart, ChartDeleter>;
using Bath = std::unique_ptr<lct_bath, BathDeleter>;
using System = std::unique_ptr<lct_system, SystemDeleter>;

Model make_model(const ModelBlock& b) {
  lct_model* m = nullptr;
  if (b.kind == "ohmic")
    check(lct_model_ohmic(b.gamma, b.omega_c, &m));
  else
    check(lct_model_super_ohmic(b.gamma, b.omega_c, b.chi_as_printed ? 1 : 0, &m));
  return Model(m);
}

Cycle solve(const lct_model* m, double w0, double ups, double wd, double T, const lct_cycle_options& o) {
  lct_cycle* c = nullptr;
  check(lct_cycle_solve(m, w0, ups, wd, T, &o, &c));
  return Cycle(c);
}

lct_cycle_options cycle_options(const RunConfig& cfg, const RunContext& ctx) {
  lct_cycle_options o;
  lct_cycle_options_default(&o);
  o.order = ctx.order_override > 0 ? ctx.order_override : cfg.order;
  o.harmonics = cfg.harmonics;
  o.consistent = cfg.consistent ? 1 : 0;
  return o;
}

std::string path_in(const RunContext& ctx, const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_absolute()) return name;
  std::filesystem::create_directories(ctx.out_dir);
  return (std::filesystem::path(ctx.out_dir) / p).string();
}

// Evaluates fn(i) for i in [0, n) on a pool of worker threads. Results are
// written by index, so output order never depends on scheduling; the error of
// the lowest failing index is rethrown.
template <class F>
void parallel_for(std::size_t n, int threads, F&& fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct GatePoint {
  double upsilon, omega_d;
};

// Refuses runs containing drive points whose classical counterpart is
// parametrically unstable (damping coefficient 2 x linewidth).
std::vector<std::string> stability_gate(const lct_model* m, double w0, const std::vector<GatePoint>& pts,
                                        const RunContext& ctx, bool allow) {
  double lw = 0.0;
  check(lct_linewidth(m, w0, &lw));
  std::vector<std::string> unstable;
  for (const auto& p : pts) {
    if (p.upsilon == 0.0) continue;
    lct_mathieu r;
    check(lct_mathieu_exponent(w0, 2.0 * lw, p.upsilon, p.omega_d, &r));
    if (r.stability != LCT_STABLE) {
      std::ostringstream os;
      os << "omega_d=" << CsvWriter::num(p.omega_d) << " upsilon=" << CsvWriter::num(p.upsilon)
         << " margin=" << CsvWriter::num(r.margin) << (r.stability == LCT_UNSTABLE ? " (unstable)" : " (marginal)");
      unstable.push_back(os.str());
    }
  }
  if (!unstable.empty() && !allow) {
    std::ostringstream os;
    os << "refusing to run: " << unstable.size() << " drive point(s) outside the stable region\n";
    for (const auto& u : unstable) os << "  " << u << "\n";
    os << "pass --allow-unstable to compute them anyway";
    throw RunError(kStabilityRefusal, os.str());
  }
  if (!unstable.empty() && ctx.log) *ctx.log << "warning: " << unstable.size() << " unstable drive point(s) included\n";
  return unstable;
}

std::string curve_label(double wd) { return wd > 0.0 ? "omega_d=" + CsvWriter::num(wd) : "undriven"; }

}  // namespace

int run_sensitivity(const RunConfig& cfg, const RunContext& ctx) {
  const Model model = make_model(cfg.model);
  const double w0 = cfg.drive.omega0;
  std::vector<double> curves;  // 0 marks the undriven curve
  if (cfg.drive.include_undriven) curves.push_back(0.0);
  for (double wd : cfg.drive.omega_d) curves.push_back(wd);
  std::vector<GatePoint> gate;
  for (double wd : curves)
    if (wd > 0.0) gate.push_back({cfg.drive.upsilon, wd});
  stability_gate(model.get(), w0, gate, ctx, ctx.allow_unstable || cfg.allow_unstable);

  const auto Ts = cfg.temperature.values();
  const auto opt = cycle_options(cfg, ctx);
  const bool fd_route = cfg.fidelity_formula == "as-printed";
  struct Row {
    lct_qfi_summary q{};
    double snr = 0.0, gibbs = 0.0, fd = 0.0;
  };
  std::vector<Row> rows(curves.size() * Ts.size());
  parallel_for(rows.size(), ctx.threads, [&](std::size_t i) {
    const double wd = curves[i / Ts.size()];
    const double T = Ts[i % Ts.size()];
    const double ups = wd > 0.0 ? cfg.drive.upsilon : 0.0;
    const double wdv = wd > 0.0 ? wd : 1.0;
    Row& r = rows[i];
    const Cycle c = solve(model.get(), w0, ups, wdv, T, opt);
    check(lct_cycle_qfi_summary(c.get(), cfg.time_samples, &r.q));
    check(lct_snr_bound(r.q.averaged, T, 1.0, &r.snr));
    check(lct_gibbs_qfi(w0, T, &r.gibbs));
    if (fd_route) {
      // Fidelity curvature at t = 0 with the selected fidelity formula.
      const double h = 1e-3 * T;
      lct_cov s0, sp, sm;
      check(lct_cycle_covariance(c.get(), 0.0, &s0));
      const Cycle cp = solve(model.get(), w0, ups, wdv, T + h, opt);
      const Cycle cm = solve(model.get(), w0, ups, wdv, T - h, opt);
      check(lct_cycle_covariance(cp.get(), 0.0, &sp));
      check(lct_cycle_covariance(cm.get(), 0.0, &sm));
      double fp = 0.0, fm = 0.0;
      check(lct_gaussian_fidelity(s0, sp, 1, &fp));
      check(lct_gaussian_fidelity(s0, sm, 1, &fm));
      r.fd = -2.0 * (fp + fm - 2.0) / (h * h);
    }
  });

  CsvWriter csv(path_in(ctx, cfg.csv), cfg.source, ctx.version);
  std::vector<std::string> cols{"curve", "omega_d", "T", "qfi_min", "qfi_max", "qfi_mean", "qfi_cycle_avg",
                                "snr_bound", "gibbs_reference"};
  if (fd_route) cols.push_back("qfi_fidelity_as_printed_t0");
  csv.header(cols);
  std::vector<Series> plot;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    Series s{curve_label(curves[c]), Ts, {}, false};
    for (std::size_t k = 0; k < Ts.size(); ++k) {
      const Row& r = rows[c * Ts.size() + k];
      std::vector<std::string> cells{curve_label(curves[c]),
                                     curves[c] > 0.0 ? CsvWriter::num(curves[c]) : "",
                                     CsvWriter::num(Ts[k]),
                                     CsvWriter::num(r.q.min),
                                     CsvWriter::num(r.q.max),
                                     CsvWriter::num(r.q.mean),
                                     CsvWriter::num(r.q.averaged),
                                     CsvWriter::num(r.snr),
                                     CsvWriter::num(r.gibbs)};
      if (fd_route) cells.push_back(CsvWriter::num(r.fd));
      csv.row(cells);
      s.y.push_back(r.q.averaged);
    }
    plot.push_back(std::move(s));
  }
  Series gibbs{"Gibbs (decoupled)", Ts, {}, true};
  for (std::size_t k = 0; k < Ts.size(); ++k) gibbs.y.push_back(rows[k].gibbs);
  plot.push_back(gibbs);

  csv.comment("fits: least-squares slope of log(qfi_cycle_avg) against log(T) on [" + CsvWriter::num(cfg.fit.min) +
              ", " + CsvWriter::num(cfg.fit.max) + "]");
  for (std::size_t c = 0; c < curves.size(); ++c) {
    std::vector<double> v;
    for (std::size_t k = 0; k < Ts.size(); ++k) v.push_back(rows[c * Ts.size() + k].q.averaged);
    lct_fit f;
    if (lct_fit_scaling(Ts.data(), v.data(), Ts.size(), cfg.fit.min, cfg.fit.max, &f) == LCT_OK)
      csv.comment("fit " + curve_label(curves[c]) + " slope=" + CsvWriter::num(f.slope) +
                  " stderr=" + CsvWriter::num(f.stderr_slope) + " points=" + std::to_string(f.points));
    else
      csv.comment("fit " + curve_label(curves[c]) + " unavailable: " + lct_last_error());
  }
  write_line_plot(path_in(ctx, cfg.svg), {"Cycle-averaged temperature QFI", "T", "QFI", true, true}, plot);
  return kSuccess;
}

int run_bec(const RunConfig& cfg, const RunContext& ctx) {
  const BecBlock& b = cfg.bec;
  lct_bec e;
  lct_bec_default(&e);
  e.m_I = b.m_I_u * kAtomicMass;
  e.m_B = b.m_B_u * kAtomicMass;
  e.N_B = b.N_B;
  e.omega_I = 2.0 * std::numbers::pi * b.omega_I_hz;
  e.omega_B = 2.0 * std::numbers::pi * b.omega_B_hz;
  e.g_IB = b.g_IB_mantissa * std::pow(10.0, b.coupling_exponent);
  e.g_B = b.g_B_mantissa * std::pow(10.0, b.coupling_exponent);
  e.upsilon_rel = b.upsilon_rel;
  e.omega_d = b.omega_d_rel * e.omega_I;
  e.mu_three_halves = b.mu_exponent == "3/2" ? 1 : 0;

  const auto Ts = cfg.temperature.values();  // kelvin
  e.T = Ts.front();
  double w0 = 0, ups = 0, wd = 0, Tn = 0, g0 = 0;
  lct_model* raw = nullptr;
  check(lct_bec_probe(&e, cfg.model.chi_as_printed ? 1 : 0, &raw, &w0, &ups, &wd, &Tn));
  const Model model(raw);
  check(lct_bec_gamma0(&e, &g0));
  stability_gate(model.get(), w0, {{ups, wd}}, ctx, ctx.allow_unstable || cfg.allow_unstable);

  const auto opt = cycle_options(cfg, ctx);
  struct Row {
    double Tn = 0, driven = 0, undriven = 0;
  };
  std::vector<Row> rows(Ts.size());
  parallel_for(Ts.size(), ctx.threads, [&](std::size_t i) {
    check(lct_bec_temperature_to_natural(&e, Ts[i], &rows[i].Tn));
    const Cycle d = solve(model.get(), w0, ups, wd, rows[i].Tn, opt);
    const Cycle u = solve(model.get(), w0, 0.0, wd, rows[i].Tn, opt);
    check(lct_cycle_responsiveness(d.get(), &rows[i].driven));
    check(lct_cycle_responsiveness(u.get(), &rows[i].undriven));
  });

  CsvWriter csv(path_in(ctx, cfg.csv), cfg.source, ctx.version);
  csv.comment("gamma0 (natural units)=" + CsvWriter::num(g0) + " omega_B/omega_I=" +
              CsvWriter::num(e.omega_B / e.omega_I) + " upsilon=" + CsvWriter::num(ups) +
              " omega_d=" + CsvWriter::num(wd));
  csv.header({"T_K", "T_natural", "responsiveness_driven", "responsiveness_undriven", "ratio"});
  Series sd{"driven", {}, {}, false}, su{"undriven", {}, {}, true}, sr{"ratio", {}, {}, false};
  std::size_t peak = 0;
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    const double ratio = rows[i].driven / rows[i].undriven;
    csv.row({CsvWriter::num(Ts[i]), CsvWriter::num(rows[i].Tn), CsvWriter::num(rows[i].driven),
             CsvWriter::num(rows[i].undriven), CsvWriter::num(ratio)});
    sd.x.push_back(Ts[i] * 1e9);
    sd.y.push_back(rows[i].driven);
    su.x.push_back(Ts[i] * 1e9);
    su.y.push_back(rows[i].undriven);
    sr.x.push_back(Ts[i] * 1e9);
    sr.y.push_back(ratio);
    if (ratio > rows[peak].driven / rows[peak].undriven) peak = i;
  }
  double t_pred = 0.0;
  check(lct_bec_temperature_to_kelvin(&e, (w0 - wd) / 4.0, &t_pred));
  csv.comment("ratio peak at T=" + CsvWriter::num(Ts[peak]) + " K; (omega0 - omega_d)/4 corresponds to T=" +
              CsvWriter::num(t_pred) + " K");
  write_line_plot(path_in(ctx, cfg.svg), {"Position-variance responsiveness", "T (nK)", "F_T(x^2)", false, true},
                  {sd, su});
  const std::string ratio_svg = std::filesystem::path(cfg.svg).replace_extension().string() + "-ratio.svg";
  write_line_plot(path_in(ctx, ratio_svg), {"Driven / undriven responsiveness", "T (nK)", "ratio", false, false},
                  {sr});
  return kSuccess;
}

int run_heat_scan(const RunConfig& cfg, const RunContext& ctx) {
  const Model model = make_model(cfg.model);
  const double w0 = cfg.drive.omega0, ups = cfg.drive.upsilon;
  const auto wds = cfg.scan.values();
  std::vector<GatePoint> gate;
  for (double wd : wds) gate.push_back({ups, wd});
  const auto unstable = stability_gate(model.get(), w0, gate, ctx, ctx.allow_unstable || cfg.allow_unstable);

  std::vector<lct_heat> rows(wds.size());
  parallel_for(wds.size(), ctx.threads, [&](std::size_t i) {
    check(lct_heat_point(model.get(), w0, ups, wds[i], cfg.T, cfg.consistent ? 1 : 0, 1e-9, &rows[i]));
  });

  CsvWriter csv(path_in(ctx, cfg.csv), cfg.source, ctx.version);
  csv.header({"omega_d", "heat_order2", "heat_order4", "input_power", "first_law_residual"});
  Series q2{"order 2", {}, {}, true}, q4{"order 4", {}, {}, false};
  for (std::size_t i = 0; i < wds.size(); ++i) {
    const auto& h = rows[i];
    csv.row({CsvWriter::num(h.omega_d), CsvWriter::num(h.heat_order2), CsvWriter::num(h.heat_order4),
             CsvWriter::num(h.input_power), CsvWriter::num(h.first_law_residual)});
    q2.x.push_back(h.omega_d);
    q2.y.push_back(-h.heat_order2);
    q4.x.push_back(h.omega_d);
    q4.y.push_back(-h.heat_order4);
  }
  for (const auto& u : unstable) csv.comment("unstable drive point: " + u);
  write_line_plot(path_in(ctx, cfg.svg), {"Cycle-averaged heating rate of the sample", "omega_d", "-Q", false, true},
                  {q2, q4});
  return kSuccess;
}

int run_stability_chart(const RunConfig& cfg, const RunContext& ctx) {
  const auto& ch = cfg.chart;
  CsvWriter csv(path_in(ctx, cfg.csv), cfg.source, ctx.version);
  csv.header({"gamma", "omega_d", "upsilon", "stability", "margin"});
  std::vector<std::string> thresholds;
  for (double g : ch.gamma) {
    lct_chart* raw = nullptr;
    check(lct_stability_chart(ch.omega_d.min, ch.omega_d.max, ch.omega_d.points, ch.upsilon.min, ch.upsilon.max,
                              ch.upsilon.points, g, cfg.drive.omega0, ctx.threads, &raw));
    const Chart chart(raw);
    int nw = 0, nu = 0;
    check(lct_chart_dims(chart.get(), &nw, &nu));
    std::vector<double> xs(nw), ys(nu);
    for (int i = 0; i < nw; ++i) check(lct_chart_axis(chart.get(), 0, i, &xs[i]));
    for (int i = 0; i < nu; ++i) check(lct_chart_axis(chart.get(), 1, i, &ys[i]));
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(nw) * nu);
    for (int iu = 0; iu < nu; ++iu)
      for (int iw = 0; iw < nw; ++iw) {
        int st = 0;
        double margin = 0.0;
        check(lct_chart_cell(chart.get(), iu, iw, &st, &margin));
        flags[static_cast<std::size_t>(iu) * nw + iw] = static_cast<std::uint8_t>(st);
        csv.row({CsvWriter::num(g), CsvWriter::num(xs[iw]), CsvWriter::num(ys[iu]), std::to_string(st),
                 CsvWriter::num(margin)});
      }
    for (int n = 1; n <= 3; ++n) {
      const double wd = 2.0 * cfg.drive.omega0 / n;
      double th = 0.0;
      check(lct_instability_threshold(cfg.drive.omega0, g, wd, ch.upsilon.max, 1e-6, &th));
      thresholds.push_back("gamma=" + CsvWriter::num(g) + " omega_d=" + CsvWriter::num(wd) +
                           " threshold upsilon=" + CsvWriter::num(th));
    }
    const std::string svg = std::filesystem::path(cfg.svg).replace_extension().string() + "-gamma" +
                            CsvWriter::num(g) + ".svg";
    write_chart(path_in(ctx, svg), {"Damped Mathieu stability, gamma=" + CsvWriter::num(g), "omega_d", "upsilon"}, xs,
                ys, flags);
  }
  for (const auto& t : thresholds) csv.comment(t);
  return kSuccess;
}

int run_oracle_check(const RunConfig& cfg, const RunContext& ctx) {
  const Model model = make_model(cfg.model);
  const auto& o = cfg.oracle;
  const double w0 = cfg.drive.omega0;
  std::ostream& log = *ctx.log;
  bool all_pass = true;
  CsvWriter csv(path_in(ctx, cfg.csv), cfg.source, ctx.version);
  csv.header({"case", "T", "t", "oracle_xx", "oracle_xp", "oracle_pp", "cycle_xx", "cycle_xp", "cycle_pp",
              "relative_error"});

  auto rel_error = [](const lct_cov& a, const lct_cov& b) {
    return std::max({std::abs(a.xx - b.xx) / std::abs(b.xx), std::abs(a.pp - b.pp) / std::abs(b.pp),
                     std::abs(a.xp - b.xp) / std::sqrt(b.xx * b.pp)});
  };
  auto report = [&](const std::string& name, double err, double tol, bool extra_ok) {
    const bool pass = err <= tol && extra_ok;
    all_pass = all_pass && pass;
    log << (pass ? "PASS " : "FAIL ") << name << ": max relative error " << CsvWriter::num(err) << " (tolerance "
        << CsvWriter::num(tol) << ")" << (extra_ok ? "" : " [recurrence guard violated]") << "\n";
  };

  {
    const double focus[] = {w0};
    lct_bath* rb = nullptr;
    check(lct_bath_focused(model.get(), o.modes, o.omega_max, focus, 1, o.half_width, o.spacing, &rb));
    const Bath bath(rb);
    lct_system* rs = nullptr;
    check(lct_system_new(bath.get(), w0, &rs));
    const System sys(rs);
    const lct_cycle_options opt = cycle_options(cfg, ctx);
    for (double T : o.temperatures) {
      const double t = o.t_final;
      lct_cov oc;
      int warn = 0;
      const lct_cov vacuum{0.5, 0.0, 0.5};
      check(lct_oracle_evolve(sys.get(), 0.0, 1.0, T, &t, 1, LCT_INIT_PRODUCT, &vacuum, o.step, &oc, &warn));
      const Cycle c = solve(model.get(), w0, 0.0, 1.0, T, opt);
      lct_cov lc;
      check(lct_cycle_covariance(c.get(), t, &lc));
      const double err = rel_error(oc, lc);
      csv.row({"undriven", CsvWriter::num(T), CsvWriter::num(t), CsvWriter::num(oc.xx), CsvWriter::num(oc.xp),
               CsvWriter::num(oc.pp), CsvWriter::num(lc.xx), CsvWriter::num(lc.xp), CsvWriter::num(lc.pp),
               CsvWriter::num(err)});
      report("undriven equilibrium T=" + CsvWriter::num(T), err, o.tolerance, warn == 0);
    }
  }

  if (o.driven_omega_d > 0.0 && cfg.drive.upsilon > 0.0) {
    const double wd = o.driven_omega_d, ups = cfg.drive.upsilon;
    lct_model* raw = model.get();
    stability_gate(raw, w0, {{ups, wd}}, ctx, ctx.allow_unstable || cfg.allow_unstable);
    std::vector<double> focus{w0};
    for (int k = 1; k <= 2; ++k) {
      focus.push_back(std::abs(w0 - k * wd));
      focus.push_back(w0 + k * wd);
    }
    lct_bath* rb = nullptr;
    check(lct_bath_focused(model.get(), o.modes, o.omega_max, focus.data(), focus.size(), 0.5 * o.half_width,
                           o.spacing, &rb));
    const Bath bath(rb);
    lct_system* rs = nullptr;
    check(lct_system_new(bath.get(), w0, &rs));
    const System sys(rs);
    const double period = 2.0 * std::numbers::pi / wd;
    std::vector<double> ts;
    for (int i = 0; i < 8; ++i) ts.push_back(o.driven_t_final - 2.0 * period + 2.0 * period * i / 7.0);
    std::vector<lct_cov> oc(ts.size());
    int warn = 0;
    const lct_cov vacuum{0.5, 0.0, 0.5};
    check(lct_oracle_evolve(sys.get(), ups, wd, o.driven_T, ts.data(), ts.size(), LCT_INIT_PRODUCT, &vacuum, o.step,
                            oc.data(), &warn));
    const Cycle c = solve(model.get(), w0, ups, wd, o.driven_T, cycle_options(cfg, ctx));
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      lct_cov lc;
      check(lct_cycle_covariance(c.get(), ts[i], &lc));
      const double err = rel_error(oc[i], lc);
      worst = std::max(worst, err);
      csv.row({"driven", CsvWriter::num(o.driven_T), CsvWriter::num(ts[i]), CsvWriter::num(oc[i].xx),
               CsvWriter::num(oc[i].xp), CsvWriter::num(oc[i].pp), CsvWriter::num(lc.xx), CsvWriter::num(lc.xp),
               CsvWriter::num(lc.pp), CsvWriter::num(err)});
    }
    report("driven limit cycle omega_d=" + CsvWriter::num(wd) + " T=" + CsvWriter::num(o.driven_T), worst,
           o.driven_tolerance, warn == 0);
  }
  return all_pass ? kSuccess : kNumericalFailure;
}

int dispatch(const std::string& sub, const RunConfig& cfg, const RunContext& ctx) {
  if (sub != cfg.experiment)
    throw ConfigError("config describes a '" + cfg.experiment + "' run but the subcommand is '" + sub + "'");
  if (sub == "sensitivity") return run_sensitivity(cfg, ctx);
  if (sub == "bec") return run_bec(cfg, ctx);
  if (sub == "heat-scan") return run_heat_scan(cfg, ctx);
  if (sub == "stability-chart") return run_stability_chart(cfg, ctx);
  if (sub == "oracle-check") return run_oracle_check(cfg, ctx);
  throw ConfigError("unknown subcommand '" + sub + "'");
}

}  // namespace cli
