#include "lcthermo/lcthermo.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "lcthermo/becmodel.hpp"
#include "lcthermo/error.hpp"
#include "lcthermo/limitcycle.hpp"
#include "lcthermo/mathieu.hpp"
#include "lcthermo/metrology.hpp"
#include "lcthermo/oracle.hpp"
#include "lcthermo/thermo.hpp"

struct lct_model {
  lct::SpectralModel m;
};
struct lct_cycle {
  lct::ThermalLimitCycle lc;
};
struct lct_chart {
  lct::StabilityChart c;
};
struct lct_bath {
  lct::oracle::DiscretizedBath b;
};
struct lct_system {
  std::unique_ptr<lct::oracle::ClosedSystem> s;
};

namespace {

thread_local std::string g_last_error;

lct_status set_error(lct_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
lct_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return LCT_OK;
  } catch (const lct::Error& e) {
    return set_error(static_cast<lct_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(LCT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LCT_ERR_INTERNAL, e.what());
  }
}

#define LCT_REQUIRE(p) \
  if (!(p)) return set_error(LCT_ERR_NULL, "null argument: " #p)

lct_cov to_c(const lct::CovarianceMatrix& c) { return {c.xx, c.xp, c.pp}; }
lct::CovarianceMatrix from_c(const lct_cov& c) { return {c.xx, c.xp, c.pp}; }

lct::bec::BecExperiment from_c(const lct_bec& e) {
  lct::bec::BecExperiment x;
  x.m_I = e.m_I;
  x.m_B = e.m_B;
  x.N_B = e.N_B;
  x.omega_I = e.omega_I;
  x.omega_B = e.omega_B;
  x.g_IB = e.g_IB;
  x.g_B = e.g_B;
  x.T = e.T;
  x.upsilon_rel = e.upsilon_rel;
  x.omega_d = e.omega_d;
  x.mu_exponent = e.mu_three_halves ? lct::bec::MuExponent::ThreeHalves : lct::bec::MuExponent::ThomasFermi;
  return x;
}

lct::SuperOhmicChi chi_variant(int as_printed) {
  return as_printed ? lct::SuperOhmicChi::AsPrinted : lct::SuperOhmicChi::Consistent;
}

}  // namespace

extern "C" {

const char* lct_last_error(void) { return g_last_error.c_str(); }

const char* lct_version(void) { return "0.1.0"; }

lct_status lct_model_ohmic(double gamma, double omega_c, lct_model** out) {
  LCT_REQUIRE(out);
  return guard([&] { *out = new lct_model{lct::SpectralModel::ohmic(gamma, omega_c)}; });
}

lct_status lct_model_super_ohmic(double gamma0, double omega_b, int as_printed, lct_model** out) {
  LCT_REQUIRE(out);
  return guard([&] { *out = new lct_model{lct::SpectralModel::super_ohmic(gamma0, omega_b, chi_variant(as_printed))}; });
}

void lct_model_free(lct_model* m) { delete m; }

lct_status lct_spectral_density(const lct_model* m, double w, double* out) {
  LCT_REQUIRE(m && out);
  return guard([&] { *out = lct::j_of_omega(m->m, w); });
}

lct_status lct_chi_hat(const lct_model* m, double w, double* re, double* im) {
  LCT_REQUIRE(m && re && im);
  return guard([&] {
    const auto c = lct::chi_hat(m->m, w);
    *re = c.real();
    *im = c.imag();
  });
}

lct_status lct_noise_kernel(const lct_model* m, double w, double T, double* out) {
  LCT_REQUIRE(m && out);
  return guard([&] { *out = lct::noise_kernel_hat(m->m, w, T); });
}

lct_status lct_counterterm(const lct_model* m, double* out) {
  LCT_REQUIRE(m && out);
  return guard([&] { *out = lct::omega_r_squared(m->m); });
}

lct_status lct_dissipation_kernel(const lct_model* m, double t, double* out) {
  LCT_REQUIRE(m && out);
  return guard([&] { *out = lct::dissipation_kernel_time(m->m, t); });
}

lct_status lct_linewidth(const lct_model* m, double omega0, double* out) {
  LCT_REQUIRE(m && out);
  return guard([&] {
    if (!(omega0 > 0.0)) lct::fail(lct::ErrorCode::Domain, "linewidth: omega0 must be positive");
    *out = lct::j_of_omega(m->m, omega0) / (2.0 * omega0);
  });
}

void lct_cycle_options_default(lct_cycle_options* opt) {
  if (!opt) return;
  opt->order = 2;
  opt->harmonics = 0;
  opt->consistent = 0;
  opt->rel_tol = 1e-9;
}

lct_status lct_cycle_solve(const lct_model* m, double omega0, double upsilon, double omega_d, double T,
                           const lct_cycle_options* opt, lct_cycle** out) {
  LCT_REQUIRE(m && out);
  return guard([&] {
    lct_cycle_options o;
    lct_cycle_options_default(&o);
    if (opt) o = *opt;
    lct::LimitCycleOptions lo;
    lo.order = o.order;
    lo.harmonics = o.harmonics > 0 ? o.harmonics : -1;
    lo.truncation = o.consistent ? lct::Truncation::Consistent : lct::Truncation::Full;
    lo.rel_tol = o.rel_tol > 0.0 ? o.rel_tol : 1e-9;
    const auto drive = lct::DriveSpec::sinusoidal(omega0, upsilon, omega_d);
    *out = new lct_cycle{lct::solve_limit_cycle(m->m, drive, T, lo)};
  });
}

void lct_cycle_free(lct_cycle* c) { delete c; }

lct_status lct_cycle_covariance(const lct_cycle* c, double t, lct_cov* out) {
  LCT_REQUIRE(c && out);
  return guard([&] { *out = to_c(lct::covariance_at_time(c->lc.sigma, t)); });
}

lct_status lct_cycle_covariance_dT(const lct_cycle* c, double t, lct_cov* out) {
  LCT_REQUIRE(c && out);
  return guard([&] { *out = to_c(lct::covariance_at_time(c->lc.dsigma_dT, t)); });
}

lct_status lct_cycle_qfi(const lct_cycle* c, double t, double* out) {
  LCT_REQUIRE(c && out);
  return guard([&] { *out = lct::limit_cycle_qfi(c->lc, t); });
}

lct_status lct_cycle_qfi_summary(const lct_cycle* c, int samples, lct_qfi_summary* out) {
  LCT_REQUIRE(c && out);
  return guard([&] {
    const auto q = lct::cycle_qfi(c->lc, samples);
    *out = {q.min, q.max, q.mean, q.averaged};
  });
}

lct_status lct_cycle_responsiveness(const lct_cycle* c, double* out) {
  LCT_REQUIRE(c && out);
  return guard([&] { *out = lct::responsiveness_x2(c->lc); });
}

lct_status lct_amplitude_abs(const lct_model* m, double omega0, double upsilon, double omega_d, int order, int k,
                             double w, double* out) {
  LCT_REQUIRE(m && out);
  return guard([&] {
    const auto drive = lct::DriveSpec::sinusoidal(omega0, upsilon, omega_d);
    const lct::AmplitudeTable table(m->m, drive, std::max(order, std::abs(k)), order);
    *out = std::abs(table.a(k, w));
  });
}

lct_status lct_gaussian_fidelity(lct_cov a, lct_cov b, int as_printed, double* out) {
  LCT_REQUIRE(out);
  return guard([&] {
    *out = lct::gaussian_fidelity(from_c(a), from_c(b),
                                  as_printed ? lct::FidelityFormula::AsPrinted : lct::FidelityFormula::Corrected);
  });
}

lct_status lct_qfi_closed_form(lct_cov s, lct_cov ds, double* out) {
  LCT_REQUIRE(out);
  return guard([&] { *out = lct::qfi_closed_form(from_c(s), from_c(ds)); });
}

lct_status lct_gibbs_covariance(double omega0, double T, lct_cov* out) {
  LCT_REQUIRE(out);
  return guard([&] { *out = to_c(lct::gibbs_covariance(omega0, T)); });
}

lct_status lct_gibbs_qfi(double omega0, double T, double* out) {
  LCT_REQUIRE(out);
  return guard([&] { *out = lct::gibbs_qfi(omega0, T); });
}

lct_status lct_snr_bound(double qfi, double T, double n, double* out) {
  LCT_REQUIRE(out);
  return guard([&] { *out = lct::snr_bound(qfi, T, n); });
}

lct_status lct_fit_scaling(const double* T, const double* value, size_t n, double t_min, double t_max, lct_fit* out) {
  LCT_REQUIRE(T && value && out);
  return guard([&] {
    const auto f = lct::fit_scaling_exponent(std::vector<double>(T, T + n), std::vector<double>(value, value + n),
                                             t_min, t_max);
    *out = {f.slope, f.stderr_slope, f.intercept, f.points};
  });
}

lct_status lct_heat_point(const lct_model* m, double omega0, double upsilon, double omega_d, double T, int consistent,
                          double rel_tol, lct_heat* out) {
  LCT_REQUIRE(m && out);
  return guard([&] {
    const auto h = lct::heat_point(m->m, omega0, upsilon, omega_d, T,
                                   consistent ? lct::Truncation::Consistent : lct::Truncation::Full,
                                   rel_tol > 0.0 ? rel_tol : 1e-9);
    *out = {h.omega_d, h.heat_order2, h.heat_order4, h.input_power, h.first_law_residual};
  });
}

lct_status lct_mathieu_exponent(double omega0, double gamma, double upsilon, double omega_d, lct_mathieu* out) {
  LCT_REQUIRE(out);
  return guard([&] {
    const auto r = lct::characteristic_exponent({omega0, gamma, upsilon, omega_d});
    *out = {r.nu.real(), r.nu.imag(), r.margin, static_cast<int>(r.stability)};
  });
}

lct_status lct_instability_threshold(double omega0, double gamma, double omega_d, double ups_hi, double tol,
                                     double* out) {
  LCT_REQUIRE(out);
  return guard([&] { *out = lct::instability_threshold(omega0, gamma, omega_d, ups_hi, tol > 0.0 ? tol : 1e-6); });
}

lct_status lct_stability_chart(double wd_min, double wd_max, int n_wd, double ups_min, double ups_max, int n_ups,
                               double gamma, double omega0, int threads, lct_chart** out) {
  LCT_REQUIRE(out);
  return guard([&] {
    *out = new lct_chart{lct::stability_chart(wd_min, wd_max, n_wd, ups_min, ups_max, n_ups, gamma, omega0, threads)};
  });
}

void lct_chart_free(lct_chart* c) { delete c; }

lct_status lct_chart_dims(const lct_chart* c, int* n_wd, int* n_ups) {
  LCT_REQUIRE(c && n_wd && n_ups);
  *n_wd = static_cast<int>(c->c.omega_d.size());
  *n_ups = static_cast<int>(c->c.upsilon.size());
  return LCT_OK;
}

lct_status lct_chart_axis(const lct_chart* c, int which, int i, double* out) {
  LCT_REQUIRE(c && out);
  const auto& axis = which == 0 ? c->c.omega_d : c->c.upsilon;
  if (which < 0 || which > 1 || i < 0 || i >= static_cast<int>(axis.size()))
    return set_error(LCT_ERR_DOMAIN, "chart axis index out of range");
  *out = axis[i];
  return LCT_OK;
}

lct_status lct_chart_cell(const lct_chart* c, int i_ups, int i_wd, int* stability, double* margin) {
  LCT_REQUIRE(c && stability && margin);
  if (i_ups < 0 || i_wd < 0 || i_ups >= static_cast<int>(c->c.upsilon.size()) ||
      i_wd >= static_cast<int>(c->c.omega_d.size()))
    return set_error(LCT_ERR_DOMAIN, "chart cell index out of range");
  const std::size_t idx = static_cast<std::size_t>(i_ups) * c->c.omega_d.size() + i_wd;
  *stability = static_cast<int>(c->c.flags[idx]);
  *margin = c->c.margin[idx];
  return LCT_OK;
}

void lct_bec_default(lct_bec* out) {
  if (!out) return;
  const auto e = lct::bec::BecExperiment::reference();
  *out = {e.m_I, e.m_B, e.N_B, e.omega_I, e.omega_B, e.g_IB, e.g_B, e.T, e.upsilon_rel, e.omega_d, 0};
}

lct_status lct_bec_gamma0(const lct_bec* e, double* out) {
  LCT_REQUIRE(e && out);
  return guard([&] { *out = lct::bec::gamma0(from_c(*e)); });
}

lct_status lct_bec_chemical_potential(const lct_bec* e, double* out) {
  LCT_REQUIRE(e && out);
  return guard([&] { *out = lct::bec::chemical_potential(from_c(*e)); });
}

lct_status lct_bec_probe(const lct_bec* e, int as_printed, lct_model** model, double* omega0, double* upsilon,
                         double* omega_d, double* T) {
  LCT_REQUIRE(e && model && omega0 && upsilon && omega_d && T);
  return guard([&] {
    const auto p = lct::bec::to_probe_model(from_c(*e), chi_variant(as_printed));
    *model = new lct_model{p.model};
    *omega0 = p.drive.omega0;
    *upsilon = p.drive.upsilon();
    *omega_d = p.drive.omega_d;
    *T = p.T;
  });
}

lct_status lct_bec_temperature_to_natural(const lct_bec* e, double T_kelvin, double* out) {
  LCT_REQUIRE(e && out);
  return guard([&] { *out = lct::bec::temperature_to_natural(from_c(*e), T_kelvin); });
}

lct_status lct_bec_temperature_to_kelvin(const lct_bec* e, double T_natural, double* out) {
  LCT_REQUIRE(e && out);
  return guard([&] { *out = lct::bec::temperature_to_kelvin(from_c(*e), T_natural); });
}

lct_status lct_bath_linear(const lct_model* m, int N, double omega_max, lct_bath** out) {
  LCT_REQUIRE(m && out);
  return guard([&] { *out = new lct_bath{lct::oracle::discretize(m->m, N, omega_max)}; });
}

lct_status lct_bath_focused(const lct_model* m, int N, double omega_max, const double* focus, size_t n_focus,
                            double half_width, double spacing, lct_bath** out) {
  LCT_REQUIRE(m && out && (focus || n_focus == 0));
  return guard([&] {
    lct::oracle::FocusedGrid g;
    g.N = N;
    g.omega_max = omega_max;
    g.focus.assign(focus, focus + n_focus);
    g.half_width = half_width;
    g.spacing = spacing;
    *out = new lct_bath{lct::oracle::discretize_focused(m->m, g)};
  });
}

void lct_bath_free(lct_bath* b) { delete b; }

lct_status lct_bath_size(const lct_bath* b, size_t* out) {
  LCT_REQUIRE(b && out);
  *out = b->b.size();
  return LCT_OK;
}

lct_status lct_bath_kernel(const lct_bath* b, double t, double* out) {
  LCT_REQUIRE(b && out);
  return guard([&] { *out = lct::oracle::mode_sum_kernel(b->b, t); });
}

lct_status lct_bath_recurrence_time(const lct_bath* b, double w, double* out) {
  LCT_REQUIRE(b && out);
  return guard([&] { *out = b->b.recurrence_time(w); });
}

lct_status lct_system_new(const lct_bath* b, double omega0, lct_system** out) {
  LCT_REQUIRE(b && out);
  return guard([&] { *out = new lct_system{std::make_unique<lct::oracle::ClosedSystem>(b->b, omega0)}; });
}

void lct_system_free(lct_system* s) { delete s; }

lct_status lct_system_gibbs(const lct_system* s, double T, lct_cov* out) {
  LCT_REQUIRE(s && out);
  return guard([&] { *out = to_c(s->s->gibbs_probe(T)); });
}

lct_status lct_oracle_evolve(const lct_system* s, double upsilon, double omega_d, double T, const double* times,
                             size_t n, int initial, const lct_cov* probe0, double h, lct_cov* out,
                             int* recurrence_warning) {
  LCT_REQUIRE(s && (times || n == 0) && (out || n == 0));
  return guard([&] {
    const auto drive = lct::DriveSpec::sinusoidal(s->s->omega0(), upsilon, omega_d);
    const auto init = initial == LCT_INIT_GIBBS ? lct::oracle::InitialState::Gibbs : lct::oracle::InitialState::Product;
    const lct::CovarianceMatrix p0 = probe0 ? from_c(*probe0) : lct::CovarianceMatrix{};
    const auto run = lct::oracle::evolve_covariance(*s->s, drive, T, std::vector<double>(times, times + n), init, p0,
                                                    h > 0.0 ? h : 0.02);
    for (size_t i = 0; i < n; ++i) out[i] = to_c(run.probe[i]);
    if (recurrence_warning) *recurrence_warning = run.recurrence_warning ? 1 : 0;
  });
}

}  // extern "C"
