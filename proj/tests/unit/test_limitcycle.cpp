#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "lcthermo/limitcycle.hpp"
#include "lcthermo/quadrature.hpp"

using namespace lct;
using std::numbers::pi;

namespace {

const SpectralModel kBath = SpectralModel::ohmic(0.01, 100.0);

// Fluctuation-dissipation oracle for the undriven Drude-damped oscillator:
// response 1/(w0^2 - w^2 - i w gamma_hat), gamma_hat = 2 gamma wc / (wc - i w).
CovarianceMatrix fdt_equilibrium(double gamma, double wc, double T) {
  auto integrand = [&](double w, double* out) {
    const std::complex<double> gh = 2.0 * gamma * wc / std::complex<double>(wc, -w);
    const std::complex<double> chi = 1.0 / (1.0 - w * w - std::complex<double>(0, 1) * w * gh);
    const double J = 2.0 * gamma * w / (1.0 + w * w / (wc * wc));
    const double c = w < 1e-12 ? 0.0 : J * std::norm(chi) / std::tanh(w / (2 * T)) / pi;
    out[0] = c;
    out[1] = c * w * w;
  };
  QuadOptions o;
  o.rel_tol = 1e-11;
  const auto r = integrate(integrand, 2, {0.0, 0.9, 0.97, 1.0, 1.03, 1.1, 3.0, wc}, true, o);
  return {r.value[0], 0.0, r.value[1]};
}

}  // namespace

TEST_CASE("undriven state matches the fluctuation-dissipation integral") {
  for (double T : {0.1, 1.0}) {
    const auto lc = solve_limit_cycle(kBath, DriveSpec::undriven(1.0), T);
    const auto ref = fdt_equilibrium(0.01, 100.0, T);
    for (double t : {0.0, 1.3, 4.0}) {
      const auto s = covariance_at_time(lc.sigma, t);
      CHECK(s.xx == doctest::Approx(ref.xx).epsilon(1e-7));
      CHECK(s.pp == doctest::Approx(ref.pp).epsilon(1e-7));
      CHECK(std::abs(s.xp) < 1e-12);
    }
  }
  // Frozen from the oracle above.
  const auto s = covariance_at_time(solve_limit_cycle(kBath, DriveSpec::undriven(1.0), 0.1).sigma, 0.0);
  CHECK(s.xx == doctest::Approx(0.497167).epsilon(2e-6));
  CHECK(s.pp == doctest::Approx(0.526271).epsilon(2e-6));
}

TEST_CASE("limit cycle is periodic with the drive") {
  const auto d = DriveSpec::sinusoidal(1.0, 0.1, 0.9);
  const auto lc = solve_limit_cycle(kBath, d, 0.2);
  const double P = 2 * pi / 0.9;
  for (double t : {0.0, 0.7, 3.1}) {
    const auto a = covariance_at_time(lc.sigma, t), b = covariance_at_time(lc.sigma, t + P);
    CHECK(a.xx == doctest::Approx(b.xx).epsilon(1e-12));
    CHECK(a.xp == doctest::Approx(b.xp).epsilon(1e-12));
    CHECK(a.pp == doctest::Approx(b.pp).epsilon(1e-12));
  }
  // Drive really modulates the state.
  CHECK(std::abs(covariance_at_time(lc.sigma, 0.0).xx - covariance_at_time(lc.sigma, P / 4).xx) > 1e-4);
}

TEST_CASE("covariance rate and temperature derivative") {
  const auto d = DriveSpec::sinusoidal(1.0, 0.1, 0.9);
  const double T = 0.3, h = 1e-4;
  const auto lc = solve_limit_cycle(kBath, d, T);
  const double t = 1.1;
  const auto up = covariance_at_time(lc.sigma, t + h), dn = covariance_at_time(lc.sigma, t - h);
  const auto rate = covariance_rate(lc.sigma, t);
  CHECK(rate.xx == doctest::Approx((up.xx - dn.xx) / (2 * h)).epsilon(1e-6));
  CHECK(rate.pp == doctest::Approx((up.pp - dn.pp) / (2 * h)).epsilon(1e-6));

  const double dT = 1e-4;
  const auto hi = covariance_at_time(solve_limit_cycle(kBath, d, T + dT).sigma, t);
  const auto lo = covariance_at_time(solve_limit_cycle(kBath, d, T - dT).sigma, t);
  const auto ds = covariance_at_time(lc.dsigma_dT, t);
  CHECK(ds.xx == doctest::Approx((hi.xx - lo.xx) / (2 * dT)).epsilon(1e-6));
  CHECK(ds.pp == doctest::Approx((hi.pp - lo.pp) / (2 * dT)).epsilon(1e-6));
}

TEST_CASE("time average agrees with sampling") {
  const auto lc = solve_limit_cycle(kBath, DriveSpec::sinusoidal(1.0, 0.1, 0.9), 0.2);
  const auto avg = time_averaged_covariance(lc.sigma);
  const int n = 64;
  double xx = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    const double v = covariance_at_time(lc.sigma, 2 * pi / 0.9 * i / n).xx;
    xx += v / n;
    sq += v * v / n;
  }
  CHECK(avg.sxx == doctest::Approx(xx).epsilon(1e-12));
  CHECK(avg.sxx_sq == doctest::Approx(sq).epsilon(1e-12));
}

TEST_CASE("amplitude orders scale as powers of the drive") {
  const AmplitudeTable full(kBath, DriveSpec::sinusoidal(1.0, 0.1, 0.9), 4, 4);
  const AmplitudeTable half(kBath, DriveSpec::sinusoidal(1.0, 0.05, 0.9), 4, 4);
  for (double w : {0.3, 1.0, 2.2})
    for (int m = 0; m <= 4; ++m)
      for (int k = -m; k <= m; k += 2) {
        const cplx a = full.component(m, k, w), b = half.component(m, k, w);
        CHECK(std::abs(a - std::pow(2.0, m) * b) <= 1e-12 * std::abs(a) + 1e-300);
      }
  // Sinusoidal drive only couples harmonics of the same parity as the order.
  CHECK(std::abs(full.component(1, 0, 1.0)) == 0.0);
  CHECK(std::abs(full.component(2, 1, 1.0)) == 0.0);
  CHECK(std::abs(full.component(0, 0, 0.7) - g0_hat(kBath, full.drive(), 0.7)) < 1e-15);
}

TEST_CASE("resonance and linewidth of the amplitude table") {
  const AmplitudeTable t(kBath, DriveSpec::undriven(1.0), 0, 0);
  CHECK(t.resonance() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(t.linewidth() == doctest::Approx(j_of_omega(kBath, 1.0) / 2.0).epsilon(2e-2));
}

TEST_CASE("undriven Green's function is time-translation invariant") {
  const AmplitudeTable t(kBath, DriveSpec::undriven(1.0), 0, 0);
  const double g1 = greens_function(t, 3.0, 1.0), g2 = greens_function(t, 7.5, 5.5);
  CHECK(g1 == doctest::Approx(g2).epsilon(1e-6));
  CHECK(std::abs(greens_function(t, 2.0, 2.0)) < 1e-6);
  // Weak damping: g(tau) ~ exp(-gamma tau) sin(tau).
  CHECK(greens_function(t, 1.0, 0.0) == doctest::Approx(std::exp(-0.01) * std::sin(1.0)).epsilon(5e-3));
}

TEST_CASE("consistent and full truncation agree at small drive") {
  const auto d = DriveSpec::sinusoidal(1.0, 0.01, 0.9);
  LimitCycleOptions c;
  c.truncation = Truncation::Consistent;
  const auto a = covariance_at_time(solve_limit_cycle(kBath, d, 0.2).sigma, 0.4);
  const auto b = covariance_at_time(solve_limit_cycle(kBath, d, 0.2, c).sigma, 0.4);
  CHECK(a.xx == doctest::Approx(b.xx).epsilon(1e-5));
}

TEST_CASE("invalid drives are rejected") {
  CHECK_THROWS(solve_limit_cycle(kBath, DriveSpec::sinusoidal(1.0, 0.1, -1.0), 0.1));
  CHECK_THROWS(solve_limit_cycle(kBath, DriveSpec::undriven(1.0), -0.1));
}
