#include "lcthermo/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcthermo/error.hpp"
#include "lcthermo/quadrature.hpp"

namespace lct {

namespace {

cplx b_coeff(const DriveSpec& d, int l, double b0) {
  if (l == 0) return b0;
  auto it = d.b.find(l);
  return it == d.b.end() ? cplx(0.0) : it->second;
}

}  // namespace

double instantaneous_heat_current(const LimitCycleState& s, const SpectralModel& m, double t) {
  const CovarianceMatrix sig = covariance_at_time(s, t);
  const CovarianceMatrix rate = covariance_rate(s, t);
  return 0.5 * rate.pp + (s.drive.omega_sq(t) + omega_r_squared(m)) * sig.xp;
}

double cycle_mean_heat_current(const LimitCycleState& s, const SpectralModel& m) {
  const double b0 = s.drive.omega0 * s.drive.omega0 + omega_r_squared(m);
  const int W = 2 * s.K + 1;
  cplx acc = 0.0;
  for (int j = 0; j < W; ++j)
    for (int k = 0; k < W; ++k) acc += b_coeff(s.drive, k - j, b0) * s.sxp(j, k);
  return acc.imag();
}

double input_power(const LimitCycleState& s, double t) {
  return 0.5 * s.drive.d_omega_sq_dt(t) * covariance_at_time(s, t).xx;
}

double cycle_averaged_input_power(const LimitCycleState& s) {
  const int W = 2 * s.K + 1;
  const double wd = s.drive.omega_d;
  cplx acc = 0.0;
  for (int j = 0; j < W; ++j)
    for (int k = 0; k < W; ++k) {
      const int l = k - j;
      if (l == 0) continue;
      acc += cplx(0.0, l * wd) * b_coeff(s.drive, l, 0.0) * s.sxx(j, k);
    }
  return 0.5 * acc.real();
}

std::vector<double> cycle_averaged_heat(const AmplitudeTable& table, double T, const std::vector<int>& orders,
                                        Truncation truncation, double rel_tol) {
  if (!(T > 0.0)) fail(ErrorCode::Domain, "cycle_averaged_heat: T must be positive");
  for (int o : orders)
    if (o < 0 || o > table.order()) fail(ErrorCode::Domain, "cycle_averaged_heat: order exceeds the amplitude table");
  const int K = table.harmonics();
  const int W = table.width();
  const int n = table.order();
  const double wd = table.drive().omega_d;
  const SpectralModel& model = table.model();

  auto integrand = [&](double w, double* out) {
    std::vector<cplx> c((n + 1) * W);
    table.components(w, c.data());
    const double mu = noise_kernel_hat(model, w, T);
    for (std::size_t q = 0; q < orders.size(); ++q) {
      const int N = orders[q];
      double acc = 0.0;
      for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        const int i = k + K;
        double prod = 0.0;
        if (truncation == Truncation::Full) {
          cplx a = 0.0;
          for (int m = 0; m <= N; ++m) a += c[m * W + i];
          prod = std::norm(a);
        } else {
          for (int m = 0; m <= N; ++m)
            for (int mp = 0; mp + m <= N; ++mp) prod += (c[m * W + i] * std::conj(c[mp * W + i])).real();
        }
        acc += k * wd * j_tilde(model, w + k * wd) * prod;
      }
      out[q] = -0.5 * acc * mu;
    }
  };

  bool tail = false;
  auto breaks = table.breakpoints(T, &tail);
  QuadOptions qo;
  qo.rel_tol = rel_tol;
  // The currents of different orders can differ by orders of magnitude;
  // integrate each separately so the tolerance is relative to its own size.
  std::vector<double> result;
  for (std::size_t q = 0; q < orders.size(); ++q) {
    auto single = [&](double w, double* out) {
      std::vector<double> tmp(orders.size());
      integrand(w, tmp.data());
      out[0] = tmp[q];
    };
    const QuadResult r = integrate(single, 1, breaks, tail, qo);
    if (!r.converged) fail(ErrorCode::Numerical, "cycle_averaged_heat: quadrature did not converge");
    result.push_back(r.value[0]);
  }
  return result;
}

HeatResult heat_point(const SpectralModel& m, double omega0, double upsilon, double omega_d, double T,
                      Truncation truncation, double rel_tol) {
  const DriveSpec drive = DriveSpec::sinusoidal(omega0, upsilon, omega_d);
  const AmplitudeTable table(m, drive, 4, 4);
  const auto q = cycle_averaged_heat(table, T, {2, 4}, truncation, rel_tol);
  CoefficientOptions co;
  co.truncation = truncation;
  co.rel_tol = rel_tol;
  // The order-N current pairs with a state whose products are truncated at
  // order N - 1, since the drive coefficients carry one power of upsilon.
  co.order = truncation == Truncation::Consistent ? 3 : -1;
  const LimitCycleState s = covariance_coefficients(table, T, co);
  HeatResult h;
  h.omega_d = omega_d;
  h.heat_order2 = q[0];
  h.heat_order4 = q[1];
  h.input_power = cycle_averaged_input_power(s);
  const double denom = std::abs(h.input_power);
  h.first_law_residual = denom > 0.0 ? std::abs(h.input_power + h.heat_order4) / denom : 0.0;
  return h;
}

}  // namespace lct
