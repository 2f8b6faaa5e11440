/* C interface to the lcthermo library.
 *
 * All objects are opaque handles created by *_new / constructor functions and
 * released with the matching *_free. Every fallible call returns an
 * lct_status; on failure lct_last_error() describes the problem (per thread).
 * Quantities are in natural units (m = hbar = k_B = 1) unless noted.
 */
#ifndef LCTHERMO_H
#define LCTHERMO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LCT_OK = 0,
  LCT_ERR_DOMAIN = 1,
  LCT_ERR_CONFIG = 2,
  LCT_ERR_UNSTABLE = 3,
  LCT_ERR_NUMERICAL = 4,
  LCT_ERR_NULL = 5,
  LCT_ERR_INTERNAL = 6
} lct_status;

const char* lct_last_error(void);
const char* lct_version(void);

typedef struct {
  double xx;
  double xp;
  double pp;
} lct_cov;

/* ---- spectral densities ---- */
typedef struct lct_model lct_model;

lct_status lct_model_ohmic(double gamma, double omega_c, lct_model** out);
/* as_printed != 0 selects the printed closed form of the dissipation kernel. */
lct_status lct_model_super_ohmic(double gamma0, double omega_b, int as_printed, lct_model** out);
void lct_model_free(lct_model* m);
lct_status lct_spectral_density(const lct_model* m, double w, double* out);
lct_status lct_chi_hat(const lct_model* m, double w, double* re, double* im);
lct_status lct_noise_kernel(const lct_model* m, double w, double T, double* out);
lct_status lct_counterterm(const lct_model* m, double* out);
/* Time-domain dissipation kernel chi(t). */
lct_status lct_dissipation_kernel(const lct_model* m, double t, double* out);
/* Probe linewidth J(w0) / (2 w0). */
lct_status lct_linewidth(const lct_model* m, double omega0, double* out);

/* ---- limit cycle ---- */
typedef struct lct_cycle lct_cycle;

typedef struct {
  int order;      /* amplitude order n (2 or 4 in practice) */
  int harmonics;  /* K; <= 0 selects 2 * order */
  int consistent; /* nonzero: bilinears truncated at total drive order */
  double rel_tol; /* quadrature tolerance; <= 0 selects 1e-9 */
} lct_cycle_options;

void lct_cycle_options_default(lct_cycle_options* opt);

/* Sinusoidal drive omega(t)^2 = omega0^2 + upsilon sin(omega_d t). */
lct_status lct_cycle_solve(const lct_model* m, double omega0, double upsilon, double omega_d, double T,
                           const lct_cycle_options* opt, lct_cycle** out);
void lct_cycle_free(lct_cycle* c);
lct_status lct_cycle_covariance(const lct_cycle* c, double t, lct_cov* out);
lct_status lct_cycle_covariance_dT(const lct_cycle* c, double t, lct_cov* out);
lct_status lct_cycle_qfi(const lct_cycle* c, double t, double* out);

typedef struct {
  double min;
  double max;
  double mean;
  double averaged;
} lct_qfi_summary;

lct_status lct_cycle_qfi_summary(const lct_cycle* c, int samples, lct_qfi_summary* out);
lct_status lct_cycle_responsiveness(const lct_cycle* c, double* out);

/* Ratio |a_k| of the amplitude table at frequency w (for ordering checks). */
lct_status lct_amplitude_abs(const lct_model* m, double omega0, double upsilon, double omega_d, int order, int k,
                             double w, double* out);

/* ---- metrology helpers ---- */
lct_status lct_gaussian_fidelity(lct_cov a, lct_cov b, int as_printed, double* out);
lct_status lct_qfi_closed_form(lct_cov s, lct_cov ds, double* out);
lct_status lct_gibbs_covariance(double omega0, double T, lct_cov* out);
lct_status lct_gibbs_qfi(double omega0, double T, double* out);
lct_status lct_snr_bound(double qfi, double T, double n, double* out);

typedef struct {
  double slope;
  double stderr_slope;
  double intercept;
  int points;
} lct_fit;

lct_status lct_fit_scaling(const double* T, const double* value, size_t n, double t_min, double t_max, lct_fit* out);

/* ---- heat ---- */
typedef struct {
  double omega_d;
  double heat_order2;
  double heat_order4;
  double input_power;
  double first_law_residual;
} lct_heat;

lct_status lct_heat_point(const lct_model* m, double omega0, double upsilon, double omega_d, double T, int consistent,
                          double rel_tol, lct_heat* out);

/* ---- damped Mathieu oscillator ---- */
typedef enum { LCT_STABLE = 0, LCT_MARGINAL = 1, LCT_UNSTABLE = 2 } lct_stability;

typedef struct {
  double nu_re;
  double nu_im;
  double margin;
  int stability; /* lct_stability */
} lct_mathieu;

lct_status lct_mathieu_exponent(double omega0, double gamma, double upsilon, double omega_d, lct_mathieu* out);
lct_status lct_instability_threshold(double omega0, double gamma, double omega_d, double ups_hi, double tol,
                                     double* out);

typedef struct lct_chart lct_chart;

lct_status lct_stability_chart(double wd_min, double wd_max, int n_wd, double ups_min, double ups_max, int n_ups,
                               double gamma, double omega0, int threads, lct_chart** out);
void lct_chart_free(lct_chart* c);
lct_status lct_chart_dims(const lct_chart* c, int* n_wd, int* n_ups);
lct_status lct_chart_axis(const lct_chart* c, int which /* 0: omega_d, 1: upsilon */, int i, double* out);
lct_status lct_chart_cell(const lct_chart* c, int i_ups, int i_wd, int* stability, double* margin);

/* ---- BEC impurity model (SI inputs) ---- */
typedef struct {
  double m_I, m_B, N_B, omega_I, omega_B, g_IB, g_B, T, upsilon_rel, omega_d;
  int mu_three_halves; /* nonzero: exponent 3/2 for the chemical potential */
} lct_bec;

void lct_bec_default(lct_bec* out);
lct_status lct_bec_gamma0(const lct_bec* e, double* out);
lct_status lct_bec_chemical_potential(const lct_bec* e, double* out);
/* Builds the probe model; returns natural-unit drive and temperature. */
lct_status lct_bec_probe(const lct_bec* e, int as_printed, lct_model** model, double* omega0, double* upsilon,
                         double* omega_d, double* T);
lct_status lct_bec_temperature_to_natural(const lct_bec* e, double T_kelvin, double* out);
lct_status lct_bec_temperature_to_kelvin(const lct_bec* e, double T_natural, double* out);

/* ---- discretised-bath oracle ---- */
typedef struct lct_bath lct_bath;
typedef struct lct_system lct_system;

lct_status lct_bath_linear(const lct_model* m, int N, double omega_max, lct_bath** out);
lct_status lct_bath_focused(const lct_model* m, int N, double omega_max, const double* focus, size_t n_focus,
                            double half_width, double spacing, lct_bath** out);
void lct_bath_free(lct_bath* b);
lct_status lct_bath_size(const lct_bath* b, size_t* out);
lct_status lct_bath_kernel(const lct_bath* b, double t, double* out);
lct_status lct_bath_recurrence_time(const lct_bath* b, double w, double* out);

lct_status lct_system_new(const lct_bath* b, double omega0, lct_system** out);
void lct_system_free(lct_system* s);
lct_status lct_system_gibbs(const lct_system* s, double T, lct_cov* out);

typedef enum { LCT_INIT_PRODUCT = 0, LCT_INIT_GIBBS = 1 } lct_initial_state;

/* Probe covariance at `n` times; probe0 may be NULL (vacuum). */
lct_status lct_oracle_evolve(const lct_system* s, double upsilon, double omega_d, double T, const double* times,
                             size_t n, int initial, const lct_cov* probe0, double h, lct_cov* out,
                             int* recurrence_warning);

#ifdef __cplusplus
}
#endif

#endif
