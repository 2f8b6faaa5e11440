#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace lct {

// x'' + gamma x' + (omega0^2 + upsilon cos(omega_d t)) x = 0. With
// t~ = omega_d t / 2 and x = exp(-gamma~ t~ / 2) y this becomes
// y'' + (a - gamma~^2/4 + 2 q cos 2t~) y = 0.
struct MathieuPoint {
  double omega0 = 1.0;
  double gamma = 0.0;
  double upsilon = 0.0;
  double omega_d = 1.0;

  double a() const { return 4.0 * omega0 * omega0 / (omega_d * omega_d); }  // omega0~^2
  double q() const { return 2.0 * upsilon / (omega_d * omega_d); }          // upsilon~
  double gamma_t() const { return 2.0 * gamma / omega_d; }                  // gamma~
};

enum class Stability : std::uint8_t { Stable = 0, Marginal = 1, Unstable = 2 };

struct MathieuResult {
  std::complex<double> nu;  // characteristic exponent, Im nu >= 0
  double trace = 0.0;       // monodromy trace over t~ in [0, pi]
  double det = 1.0;         // monodromy determinant (1 for the y equation)
  double margin = 0.0;      // Im nu - gamma~/2
  Stability stability = Stability::Marginal;
};

constexpr double kMarginalBand = 1e-9;

MathieuResult characteristic_exponent(const MathieuPoint& p, double tol = 1e-10);
bool is_stable(const MathieuPoint& p);

struct StabilityChart {
  std::vector<double> omega_d;  // columns
  std::vector<double> upsilon;  // rows
  std::vector<Stability> flags; // row-major: flags[i_ups * omega_d.size() + i_wd]
  std::vector<double> margin;

  Stability at(std::size_t i_ups, std::size_t i_wd) const { return flags[i_ups * omega_d.size() + i_wd]; }
};

// Inclusive linear grids; threads <= 0 uses the hardware concurrency.
StabilityChart stability_chart(double wd_min, double wd_max, int n_wd, double ups_min, double ups_max, int n_ups,
                               double gamma, double omega0, int threads = 1);

// Smallest upsilon in (0, ups_hi] at which the point turns unstable, by
// bisection to tolerance `tol`; returns +inf if ups_hi is still stable.
double instability_threshold(double omega0, double gamma, double omega_d, double ups_hi, double tol = 1e-6);

}  // namespace lct
