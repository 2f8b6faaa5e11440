#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lcthermo/covariance.hpp"
#include "lcthermo/limitcycle.hpp"
#include "lcthermo/spectral.hpp"

namespace lct::oracle {

// Explicit bath of unit-mass oscillators, g_mu^2 = (2/pi) w_mu J(w_mu) dw_mu.
struct DiscretizedBath {
  std::vector<double> omega;
  std::vector<double> width;
  std::vector<double> g;

  std::size_t size() const { return omega.size(); }
  // sum g^2 / w^2: the counter-term matching this discrete bath.
  double counterterm() const;
  // (pi/2) sum g^2 / w, the discrete estimate of int J dw.
  double spectral_weight() const;
  // 2 pi / (local mode spacing) around frequency w.
  double recurrence_time(double w) const;
};

// Midpoint grid with N equal cells on (0, omega_max].
DiscretizedBath discretize(const SpectralModel& m, int N, double omega_max);

// Non-uniform grid: `fine` equal cells of spacing `spacing` spread over the
// windows [f - half_width, f + half_width] around each focus frequency, the
// remaining cells geometric between spacing and omega_max.
struct FocusedGrid {
  int N = 2000;
  double omega_max = 1000.0;
  std::vector<double> focus{1.0};
  double half_width = 0.5;
  double spacing = 0.005;
};
DiscretizedBath discretize_focused(const SpectralModel& m, const FocusedGrid& spec);

// chi(t) reconstructed from the modes: sum g^2 / w sin(w t).
double mode_sum_kernel(const DiscretizedBath& bath, double t);

// Probe + bath as a closed linear system with potential matrix
// V = [[w0^2 + counterterm, -g^T], [-g, diag(w^2)]], diagonalised once.
class ClosedSystem {
 public:
  ClosedSystem(const DiscretizedBath& bath, double omega0);

  const Eigen::VectorXd& normal_frequencies() const { return Omega_; }
  const Eigen::MatrixXd& modes() const { return U_; }
  // Probe component of each normal mode.
  Eigen::VectorXd probe_weights() const { return U_.row(0).transpose(); }
  const DiscretizedBath& bath() const { return bath_; }
  double omega0() const { return omega0_; }

  // Probe block of the global Gibbs state.
  CovarianceMatrix gibbs_probe(double T) const;

 private:
  DiscretizedBath bath_;
  double omega0_;
  Eigen::VectorXd Omega_;
  Eigen::MatrixXd U_;
};

enum class InitialState {
  Product,  // probe state (given) times thermal bath
  Gibbs,    // thermal state of the coupled undriven system
};

struct OracleRun {
  std::vector<double> t;
  std::vector<CovarianceMatrix> probe;
  double recurrence_time = 0.0;
  bool recurrence_warning = false;
};

// Probe covariance at the requested times for the closed system driven by
// omega(t)^2 = omega0^2 + modulation (counter-term included). Undriven runs are
// propagated exactly in the normal-mode basis; driven runs integrate the
// adjoint equations for the probe rows of the propagator with an exponential
// integrator of step h.
OracleRun evolve_covariance(const ClosedSystem& sys, const DriveSpec& drive, double T, const std::vector<double>& times,
                            InitialState initial = InitialState::Product,
                            const CovarianceMatrix& probe0 = CovarianceMatrix{}, double h = 0.02);

// Relative change of the energy of a generic solution after integrating the
// equations with a static frequency shift (a time-independent, hence
// conservative, perturbation) using the same exponential integrator.
double integrator_energy_drift(const ClosedSystem& sys, double t_final, double h = 0.02, double static_shift = 0.1);

}  // namespace lct::oracle
