#pragma once

#include <vector>

#include "lcthermo/limitcycle.hpp"

namespace lct {

// Q(t) = 1/2 d sigma_pp/dt + (omega(t)^2 + omega_R^2) sigma_xp(t).
double instantaneous_heat_current(const LimitCycleState& s, const SpectralModel& m, double t);

// Exact cycle average of instantaneous_heat_current from the harmonic
// coefficients: Im sum_jk b_{k-j} s^xp_jk with b_0 = omega0^2 + omega_R^2.
double cycle_mean_heat_current(const LimitCycleState& s, const SpectralModel& m);

// W(t) = 1/2 d(omega(t)^2)/dt sigma_xx(t).
double input_power(const LimitCycleState& s, double t);
double cycle_averaged_input_power(const LimitCycleState& s);

// Cycle-averaged probe-to-sample heat current
//   -(1/pi) int_0^inf sum_k k wd J~(w + k wd) |a_k(w)|^2 J(w) coth(w/2T) dw
// evaluated for each requested order. With Truncation::Consistent the
// products |a_k|^2 keep only terms of total drive order <= order; with
// Truncation::Full they use the order-th iterate a_k^(order).
std::vector<double> cycle_averaged_heat(const AmplitudeTable& table, double T, const std::vector<int>& orders,
                                        Truncation truncation = Truncation::Consistent, double rel_tol = 1e-9);

struct HeatResult {
  double omega_d = 0.0;
  double heat_order2 = 0.0;
  double heat_order4 = 0.0;
  double input_power = 0.0;  // consistent with the order-4 current
  double first_law_residual = 0.0;
};

// One point of a drive-frequency scan (sinusoidal drive).
HeatResult heat_point(const SpectralModel& m, double omega0, double upsilon, double omega_d, double T,
                      Truncation truncation = Truncation::Consistent, double rel_tol = 1e-9);

}  // namespace lct
