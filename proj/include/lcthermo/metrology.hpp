#pragma once

#include <functional>
#include <vector>

#include "lcthermo/covariance.hpp"
#include "lcthermo/limitcycle.hpp"

namespace lct {

// Corrected: F = 2 / (sqrt(kappa + lambda) - sqrt(lambda)).
// AsPrinted: F = 2 / (sqrt(kappa + 1) - sqrt(lambda)); kept for comparison only,
// it does not satisfy F(rho, rho) = 1.
enum class FidelityFormula { Corrected, AsPrinted };

// Squared Uhlmann fidelity between two single-mode Gaussian states with
// kappa = 4 det(S1 + S2), lambda = (4 det S1 - 1)(4 det S2 - 1).
double gaussian_fidelity(const CovarianceMatrix& s1, const CovarianceMatrix& s2,
                         FidelityFormula formula = FidelityFormula::Corrected);

// Closed-form temperature QFI of a single-mode Gaussian state given the
// covariance matrix and its temperature derivative (purity-based formula).
double qfi_closed_form(const CovarianceMatrix& s, const CovarianceMatrix& ds);

// QFI = -2 d^2 F / d tau^2 at tau = 0 from the fidelity between states at T
// and T + tau; symmetric differences at h and h/2 with one Richardson step.
double qfi_temperature(const std::function<CovarianceMatrix(double)>& source, double T, double h_rel = 1e-3);

// Thermal state of an isolated oscillator.
CovarianceMatrix gibbs_covariance(double omega0, double T);
CovarianceMatrix gibbs_covariance_dT(double omega0, double T);
// C(T)/T^2 with C = x^2 csch^2 x, x = omega0 / 2T.
double gibbs_qfi(double omega0, double T);

// Maximum signal-to-noise T / dT = T sqrt(N qfi).
double snr_bound(double qfi, double T, double N = 1.0);

// Instantaneous QFI of the limit cycle at time t.
double limit_cycle_qfi(const ThermalLimitCycle& lc, double t);

struct CycleQfi {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;      // mean over the m sampled times
  double averaged = 0.0;  // cycle mean of the instantaneous QFI
};

// m equispaced samples over one drive period; the cycle mean uses
// `avg_samples` trapezoidal points (spectrally accurate for periodic data).
CycleQfi cycle_qfi(const ThermalLimitCycle& lc, int m = 10, int avg_samples = 256);

// |d sigma_xx_bar / dT|^2 / (3 <sigma_xx^2> - <sigma_xx>^2) for the
// cycle-averaged state.
double responsiveness_x2(const ThermalLimitCycle& lc);

struct ScalingFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  double intercept = 0.0;
  int points = 0;
};

// Least-squares slope of log(value) vs log(T) over T in [t_min, t_max].
ScalingFit fit_scaling_exponent(const std::vector<double>& T, const std::vector<double>& value, double t_min,
                                double t_max);

}  // namespace lct
