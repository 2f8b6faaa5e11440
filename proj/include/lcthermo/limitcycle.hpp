#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "lcthermo/covariance.hpp"
#include "lcthermo/spectral.hpp"

namespace lct {

// omega(t)^2 = omega0^2 + sum_l b_l exp(i l omega_d t), l != 0.
struct DriveSpec {
  double omega0 = 1.0;
  double omega_d = 1.0;
  std::map<int, cplx> b;

  // omega(t)^2 = omega0^2 + upsilon sin(omega_d t): b_{+-1} = -+ i upsilon / 2.
  static DriveSpec sinusoidal(double omega0, double upsilon, double omega_d);
  static DriveSpec undriven(double omega0) { return sinusoidal(omega0, 0.0, 1.0); }

  double upsilon() const;
  bool driven() const;
  double omega_sq(double t) const;       // omega0^2 + modulation, no counter-term
  double d_omega_sq_dt(double t) const;  // time derivative of the modulation
  void validate() const;
};

cplx g0_hat(const SpectralModel& m, const DriveSpec& d, double w);

// Bilinear products entering the covariance coefficients.
//   Full:       a_j^(n) a_k^(n)*, with a^(n) the n-th iterate.
//   Consistent: sum over orders m + m' <= n of c^[m]_j c^[m']_k*, i.e. the
//               products truncated at total order n in the drive amplitude.
enum class Truncation { Full, Consistent };

// On-demand amplitude evaluator. Amplitudes are kept order-separated:
// c^[0]_k = g0_hat(w) delta_k0 and
// c^[m]_k = -g0_hat(w + k wd) sum_l b_l c^[m-1]_{k-l},
// so that a_k^(n) = sum_{m<=n} c^[m]_k.
class AmplitudeTable {
 public:
  AmplitudeTable(SpectralModel model, DriveSpec drive, int K, int n);

  int harmonics() const { return K_; }
  int order() const { return n_; }
  int width() const { return 2 * K_ + 1; }
  // True if the recursion generated harmonics beyond K that were dropped.
  bool clipped() const { return clipped_; }
  const SpectralModel& model() const { return model_; }
  const DriveSpec& drive() const { return drive_; }

  // Writes (n+1) * (2K+1) values, index m * (2K+1) + (k + K).
  void components(double w, cplx* out) const;
  cplx component(int m, int k, double w) const;
  cplx a(int k, double w) const;

  // Probe resonance (zero of Re g0_hat^-1 near omega0).
  double resonance() const { return w_res_; }
  double linewidth() const { return gamma_eff_; }

  // Panel breakpoints on [0, w_max] for integrals against the noise kernel at
  // temperature T. Returns w_max as the last entry; `tail` reports whether an
  // unbounded tail remains.
  std::vector<double> breakpoints(double T, bool* tail) const;

 private:
  SpectralModel model_;
  DriveSpec drive_;
  int K_, n_;
  int reach_;
  bool clipped_ = false;
  double w_res_;
  double gamma_eff_;
};

AmplitudeTable solve_amplitudes(const SpectralModel& model, const DriveSpec& drive, int K, int n);

// Coefficient matrices for covariance harmonics (indices j, k in [-K, K]).
struct LimitCycleState {
  int K = 0;
  double T = 0.0;
  DriveSpec drive;
  Eigen::MatrixXcd sxx, sxp, spp;
  double quad_error = 0.0;
  bool converged = true;
};

enum class Kernel { Noise, NoiseDT };

struct CoefficientOptions {
  Truncation truncation = Truncation::Full;
  int order = -1;  // bilinear order for Consistent truncation; -1 -> table order
  double rel_tol = 1e-9;
  Kernel kernel = Kernel::Noise;
};

LimitCycleState covariance_coefficients(const AmplitudeTable& table, double T, const CoefficientOptions& opt = {});

CovarianceMatrix covariance_at_time(const LimitCycleState& s, double t);
// Derivative of the covariance matrix with respect to time.
CovarianceMatrix covariance_rate(const LimitCycleState& s, double t);

struct TimeAverage {
  double sxx = 0.0;
  double spp = 0.0;
  double sxx_sq = 0.0;  // cycle mean of sigma_xx(t)^2
};
TimeAverage time_averaged_covariance(const LimitCycleState& s);

// Green's function reconstruction g(t, t') from the amplitude table.
double greens_function(const AmplitudeTable& table, double t, double tp, double rel_tol = 1e-8);

// Covariances and their temperature derivatives at one temperature.
struct ThermalLimitCycle {
  LimitCycleState sigma;
  LimitCycleState dsigma_dT;
};

struct LimitCycleOptions {
  int order = 2;
  int harmonics = -1;  // -1 -> 2 * order
  Truncation truncation = Truncation::Full;
  double rel_tol = 1e-9;
};

ThermalLimitCycle solve_limit_cycle(const SpectralModel& model, const DriveSpec& drive, double T,
                                    const LimitCycleOptions& opt = {});

}  // namespace lct
