#include <doctest.h>

#include <cmath>
#include <random>

#include "lcthermo/error.hpp"
#include "lcthermo/metrology.hpp"

using namespace lct;

namespace {

CovarianceMatrix random_physical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double n = 0.5 + std::exp(2.0 * u(rng) + 0.5);  // symplectic eigenvalue
  const double r = 0.8 * u(rng), phi = 3.0 * u(rng);
  const double c = std::cosh(2 * r), s = std::sinh(2 * r);
  return {n * (c + s * std::cos(phi)), n * s * std::sin(phi), n * (c - s * std::cos(phi))};
}

// Thermal states with occupations n1, n2.
double thermal_fidelity(double n1, double n2) {
  const double d = std::sqrt((n1 + 1) * (n2 + 1)) - std::sqrt(n1 * n2);
  return 1.0 / (d * d);
}

}  // namespace

TEST_CASE("fidelity properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_physical(rng), b = random_physical(rng);
    CHECK(gaussian_fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-12));
    const double f = gaussian_fidelity(a, b);
    CHECK(f > 0.0);
    CHECK(f <= 1.0 + 1e-12);
    CHECK(f == doctest::Approx(gaussian_fidelity(b, a)).epsilon(1e-12));
  }
  for (double n1 : {0.0, 0.3, 2.0})
    for (double n2 : {0.1, 1.0, 5.0}) {
      const CovarianceMatrix a{n1 + 0.5, 0.0, n1 + 0.5}, b{n2 + 0.5, 0.0, n2 + 0.5};
      CHECK(gaussian_fidelity(a, b) == doctest::Approx(thermal_fidelity(n1, n2)).epsilon(1e-12));
    }
}

TEST_CASE("printed fidelity fails for the vacuum") {
  const CovarianceMatrix vac;
  CHECK(gaussian_fidelity(vac, vac, FidelityFormula::AsPrinted) == doctest::Approx(2.0 / std::sqrt(5.0)));
}

TEST_CASE("unphysical input is a domain error") {
  const CovarianceMatrix bad{0.4, 0.0, 0.4};
  CHECK_THROWS_AS(bad.require_physical(), Error);
  CHECK_THROWS_AS(gaussian_fidelity(bad, CovarianceMatrix{}), Error);
}

TEST_CASE("closed-form QFI matches the fidelity curvature") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  for (int i = 0; i < 30; ++i) {
    const double w = u(rng), T0 = u(rng), r = 0.5 * (u(rng) - 1.0);
    auto source = [&](double T) {
      const double nu = 0.5 / std::tanh(w / (2 * T));
      return CovarianceMatrix{nu * std::exp(2 * r), 0.0, nu * std::exp(-2 * r)};
    };
    const double h = 1e-5;
    const auto s = source(T0), up = source(T0 + h), dn = source(T0 - h);
    const CovarianceMatrix ds{(up.xx - dn.xx) / (2 * h), 0.0, (up.pp - dn.pp) / (2 * h)};
    CHECK(qfi_temperature(source, T0) == doctest::Approx(qfi_closed_form(s, ds)).epsilon(1e-5));
  }
}

TEST_CASE("Gibbs state and its QFI") {
  for (double T : {0.2, 0.5, 1.0, 3.0}) {
    const double w = 1.3, nu = 0.5 / std::tanh(w / (2 * T));
    const auto g = gibbs_covariance(w, T);
    CHECK(g.xx == doctest::Approx(nu / w));
    CHECK(g.pp == doctest::Approx(nu * w));
    const double x = w / (2 * T);
    CHECK(gibbs_qfi(w, T) == doctest::Approx(x * x / std::pow(std::sinh(x), 2) / (T * T)).epsilon(1e-12));
    CHECK(qfi_closed_form(g, gibbs_covariance_dT(w, T)) == doctest::Approx(gibbs_qfi(w, T)).epsilon(1e-10));
  }
}

TEST_CASE("scaling fit and SNR bound") {
  std::vector<double> T, v;
  for (int i = 0; i <= 20; ++i) {
    T.push_back(std::pow(10.0, -3 + 0.1 * i));
    v.push_back(4.0 * std::pow(T.back(), 1.5));
  }
  const auto f = fit_scaling_exponent(T, v, 1e-3, 1e-2);
  CHECK(f.slope == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(f.points == 11);
  CHECK(f.stderr_slope < 1e-10);
  CHECK(snr_bound(4.0, 0.5, 9.0) == doctest::Approx(0.5 * 6.0));
}

TEST_CASE("limit-cycle QFI summary is consistent") {
  const auto lc = solve_limit_cycle(SpectralModel::ohmic(0.01, 100.0), DriveSpec::sinusoidal(1.0, 0.1, 0.9), 0.1);
  const auto q = cycle_qfi(lc, 10);
  CHECK(q.min <= q.mean);
  CHECK(q.mean <= q.max);
  CHECK(q.averaged > 0.0);
  CHECK(limit_cycle_qfi(lc, 0.0) >= q.min);
  CHECK(responsiveness_x2(lc) > 0.0);
}
