#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcthermo/error.hpp"
#include "lcthermo/quadrature.hpp"
#include "lcthermo/spectral.hpp"

using namespace lct;
using std::numbers::pi;

namespace {

// Re chi_hat from a principal-value integral of J, evaluated by subtracting
// the pole: PV int_0^B f/(v^2 - w^2) with f(v) = (2/pi) v J(v).
double re_chi_kramers_kronig(const SpectralModel& m, double w, double B) {
  auto f = [&](double v) { return 2.0 / pi * v * j_of_omega(m, v); };
  const double fw = f(w);
  auto g = [&](double v) {
    const double d = v * v - w * w;
    return std::abs(d) < 1e-14 ? 0.0 : (f(v) - fw) / d;
  };
  QuadOptions o;
  o.rel_tol = 1e-11;
  const double smooth = integrate_scalar(g, {0.0, w, B}, false, o);
  return smooth + fw / (2.0 * w) * std::log(std::abs((B - w) / (B + w)));
}

}  // namespace

TEST_CASE("ohmic density and closed forms") {
  const auto m = SpectralModel::ohmic(0.01, 100.0);
  CHECK(j_of_omega(m, 0.0) == 0.0);
  CHECK(j_of_omega(m, 1.0) == doctest::Approx(0.02 / (1.0 + 1e-4)).epsilon(1e-15));
  CHECK(j_tilde(m, -2.0) == doctest::Approx(-j_of_omega(m, 2.0)));
  CHECK(omega_r_squared(m) == doctest::Approx(2.0));
  // chi(t) = 2 gamma wc^2 exp(-wc t), so chi_hat(w) = 2 gamma wc^2 / (wc + i w).
  for (double w : {0.0, 0.3, 1.0, 7.0, 250.0}) {
    const cplx expect = 2.0 * 0.01 * 1e4 / cplx(100.0, w);
    const cplx got = chi_hat(m, w);
    CHECK(got.real() == doctest::Approx(expect.real()).epsilon(1e-12));
    CHECK(got.imag() == doctest::Approx(expect.imag()).epsilon(1e-12));
    CHECK(got.imag() == doctest::Approx(-j_tilde(m, w)).epsilon(1e-12));
  }
  for (double t : {0.0, 0.001, 0.01, 0.05})
    CHECK(dissipation_kernel_time(m, t) == doctest::Approx(200.0 * std::exp(-100.0 * t)).epsilon(1e-6));
}

TEST_CASE("quartic bath: consistent kernel obeys Kramers-Kronig") {
  const auto m = SpectralModel::super_ohmic(7e-5, 2.0);
  CHECK(m.support_end() == 2.0);
  CHECK(j_of_omega(m, 1.0) == doctest::Approx(2 * 7e-5));
  CHECK(j_of_omega(m, 2.5) == 0.0);
  CHECK(omega_r_squared(m) == 0.0);
  // Zero frequency: (2/pi) int_0^B J / v dv = g0 B^4 / pi.
  CHECK(chi_hat(m, 0.0).real() == doctest::Approx(7e-5 * 16.0 / pi).epsilon(1e-12));
  for (double w : {0.3, 1.0, 1.7, 3.0}) {
    CHECK(chi_hat(m, w).real() == doctest::Approx(re_chi_kramers_kronig(m, w, 2.0)).epsilon(1e-7));
    CHECK(chi_hat(m, w).imag() == doctest::Approx(-j_tilde(m, w)));
  }
}

TEST_CASE("quartic bath: printed kernel differs from the consistent one") {
  const auto a = SpectralModel::super_ohmic(1e-3, 2.0, SuperOhmicChi::AsPrinted);
  const auto c = SpectralModel::super_ohmic(1e-3, 2.0);
  CHECK(chi_hat(a, 1.0).imag() == doctest::Approx(chi_hat(c, 1.0).imag()));
  CHECK(std::abs(chi_hat(a, 1.0).real() - chi_hat(c, 1.0).real()) > 1e-6);
}

TEST_CASE("noise kernel") {
  const auto m = SpectralModel::ohmic(0.01, 100.0);
  const double w = 0.7, T = 0.3;
  CHECK(noise_kernel_hat(m, w, T) == doctest::Approx(2.0 / pi * j_of_omega(m, w) / std::tanh(w / (2 * T))));
  const double h = 1e-5;
  const double fd = (noise_kernel_hat(m, w, T + h) - noise_kernel_hat(m, w, T - h)) / (2 * h);
  CHECK(noise_kernel_hat_dT(m, w, T) == doctest::Approx(fd).epsilon(1e-7));
  // High temperature: coth x -> 1/x.
  CHECK(noise_kernel_hat(m, 1e-3, 1e3) == doctest::Approx(2.0 / pi * j_of_omega(m, 1e-3) * 2e6).epsilon(1e-6));
}

TEST_CASE("domain errors") {
  const auto m = SpectralModel::ohmic(0.01, 100.0);
  CHECK_THROWS_AS(j_of_omega(m, -1.0), Error);
  CHECK_THROWS_AS(SpectralModel::ohmic(-0.1, 1.0), Error);
  CHECK_THROWS_AS(SpectralModel::super_ohmic(1e-3, 0.0), Error);
}
