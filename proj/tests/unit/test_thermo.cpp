#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcthermo/thermo.hpp"

using namespace lct;
using std::numbers::pi;

namespace {
const SpectralModel kBath = SpectralModel::ohmic(0.01, 100.0);
}

TEST_CASE("no drive, no heat") {
  const AmplitudeTable t(kBath, DriveSpec::undriven(1.0), 4, 4);
  for (double q : cycle_averaged_heat(t, 0.2, {2, 4})) CHECK(std::abs(q) < 1e-15);
}

TEST_CASE("cycle means agree with sampled instantaneous values") {
  const auto d = DriveSpec::sinusoidal(1.0, 0.1, 1.3);
  const auto lc = solve_limit_cycle(kBath, d, 0.1);
  const int n = 128;
  double q = 0, w = 0;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * pi / 1.3 * i / n;
    q += instantaneous_heat_current(lc.sigma, kBath, t) / n;
    w += input_power(lc.sigma, t) / n;
  }
  CHECK(cycle_mean_heat_current(lc.sigma, kBath) == doctest::Approx(q).epsilon(1e-9));
  CHECK(cycle_averaged_input_power(lc.sigma) == doctest::Approx(w).epsilon(1e-9));
}

TEST_CASE("lowest-order heat is quadratic in the drive") {
  const AmplitudeTable a(kBath, DriveSpec::sinusoidal(1.0, 0.1, 1.0), 4, 2);
  const AmplitudeTable b(kBath, DriveSpec::sinusoidal(1.0, 0.05, 1.0), 4, 2);
  const double qa = cycle_averaged_heat(a, 0.025, {2})[0], qb = cycle_averaged_heat(b, 0.025, {2})[0];
  CHECK(qa / qb == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("first law over a cycle") {
  for (double wd : {0.5, 1.0, 1.5}) {
    const auto h = heat_point(kBath, 1.0, 0.1, wd, 0.025);
    CHECK(h.first_law_residual < 1e-6);
    // Energy flows from the drive through the probe into the bath.
    CHECK(h.heat_order4 < 0.0);
    CHECK(h.input_power > 0.0);
  }
}
