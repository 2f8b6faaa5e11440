#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcthermo/limitcycle.hpp"
#include "lcthermo/oracle.hpp"

using namespace lct;
using namespace lct::oracle;

namespace {
const SpectralModel kBath = SpectralModel::ohmic(0.01, 100.0);
}

TEST_CASE("vanishing spectral density gives an uncoupled bath") {
  const auto b = discretize(SpectralModel::ohmic(0.0, 100.0), 100, 500.0);
  for (double g : b.g) CHECK(g == 0.0);
  CHECK(b.counterterm() == 0.0);
}

TEST_CASE("discrete sums reproduce the continuum") {
  const auto b = discretize(kBath, 20000, 1000.0);
  // int_0^wmax (2/pi) J / w = (4 gamma wc / pi) atan(wmax / wc).
  CHECK(b.counterterm() == doctest::Approx(4 * 0.01 * 100 / std::numbers::pi * std::atan(10.0)).epsilon(1e-4));
  CHECK(b.spectral_weight() == doctest::Approx(0.01 * 1e4 * std::log(101.0)).epsilon(1e-4));
}

TEST_CASE("mode sum reconstructs the dissipation kernel") {
  // chi jumps from 0 to 2 gamma wc^2 at t = 0+, which no finite sine sum can
  // follow, so the comparison starts at t = 0.1 / wc.
  const auto b = discretize(kBath, 100000, 2e5);
  const double chi0 = dissipation_kernel_time(kBath, 0.0);
  for (int i = 1; i <= 50; ++i) {
    const double t = 0.1 * i / 100.0;  // 0.1 / wc .. 5 / wc
    CHECK(std::abs(mode_sum_kernel(b, t) - dissipation_kernel_time(kBath, t)) < 1e-2 * chi0);
  }
}

TEST_CASE("doubling the modes at least halves the reconstruction error") {
  // Reference: the same truncated integral on a much finer grid.
  const double wmax = 2e5, t = 0.01;
  const double ref = mode_sum_kernel(discretize(kBath, 1 << 21, wmax), t);
  double prev = 0.0;
  for (int N : {2000, 4000, 8000}) {
    const double err = std::abs(mode_sum_kernel(discretize(kBath, N, wmax), t) - ref);
    if (prev > 0.0) CHECK(err <= 0.5 * prev);
    prev = err;
  }
}

TEST_CASE("refinement converges the Gibbs probe state") {
  FocusedGrid coarse, fine;
  coarse.N = 500;
  coarse.spacing = 0.02;
  fine.N = 1000;
  fine.spacing = 0.01;
  const ClosedSystem a(discretize_focused(kBath, coarse), 1.0), b(discretize_focused(kBath, fine), 1.0);
  const auto lc = covariance_at_time(solve_limit_cycle(kBath, DriveSpec::undriven(1.0), 0.5).sigma, 0.0);
  const auto ga = a.gibbs_probe(0.5), gb = b.gibbs_probe(0.5);
  CHECK(std::abs(gb.xx / lc.xx - 1) <= std::abs(ga.xx / lc.xx - 1) + 1e-4);
  CHECK(gb.xx == doctest::Approx(lc.xx).epsilon(1e-2));
  CHECK(gb.pp == doctest::Approx(lc.pp).epsilon(1e-2));
}

TEST_CASE("closed system structure and exact propagation") {
  FocusedGrid g;
  g.N = 400;
  g.spacing = 0.02;
  const ClosedSystem sys(discretize_focused(kBath, g), 1.0);
  CHECK(sys.probe_weights().squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sys.normal_frequencies().minCoeff() > 0.0);
  // The coupled Gibbs state is stationary without drive.
  const auto run = evolve_covariance(sys, DriveSpec::undriven(1.0), 0.3, {0.0, 5.0, 20.0}, InitialState::Gibbs);
  const auto g0 = sys.gibbs_probe(0.3);
  for (const auto& s : run.probe) {
    CHECK(s.xx == doctest::Approx(g0.xx).epsilon(1e-10));
    CHECK(s.pp == doctest::Approx(g0.pp).epsilon(1e-10));
  }
  CHECK(integrator_energy_drift(sys, 50.0) < 1e-8);
}

TEST_CASE("driven integrator agrees with exact propagation for a static shift") {
  FocusedGrid g;
  g.N = 300;
  g.spacing = 0.02;
  const ClosedSystem sys(discretize_focused(kBath, g), 1.0);
  // A drive with negligible amplitude must reproduce the exact undriven rows.
  const std::vector<double> ts{0.0, 3.0, 10.0};
  const auto exact = evolve_covariance(sys, DriveSpec::undriven(1.0), 0.2, ts);
  const auto num = evolve_covariance(sys, DriveSpec::sinusoidal(1.0, 1e-12, 0.9), 0.2, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(num.probe[i].xx == doctest::Approx(exact.probe[i].xx).epsilon(1e-9));
    CHECK(num.probe[i].pp == doctest::Approx(exact.probe[i].pp).epsilon(1e-9));
  }
}
